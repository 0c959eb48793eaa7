//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use covers::floer::{nu_sharp, thm_nu_applies, trace_map_trivial, Catalog, KnotClass, NuSharpInfo, Shape};
use covers::matrices::{blow_down, circulant_spectrum, det_exact, enumerate_sicup, CirculantFirstRow, IntMatrix};
use covers::pell::{enumerate_m5, phi, phi_inverse, solve_pell_5_4, SicupParams5};
use covers::poly::IntPoly;
use covers::sigma::{
    brute_force_linking, closed_form_first_row, expected_connectivity, identify_l1, sigma_diagram, SigmaParams,
};
use covers::tangle::{
    alexander_via_burau, braid_permutation, circulant_block_check, example_ten_braid, linking_matrix_of_closure,
    BraidWord, Diagram,
};
use covers::twobridge::{
    alexander_poly, even_cf, homology_order, seifert_from_even_cf, tl_signature, TwoBridgeFraction,
};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn matrix_key(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().expect("small entries")
}

fn criterion_1() -> Outcome {
    let pell = enumerate_m5(6);
    let enumerated = enumerate_sicup(5, 50);
    let a: BTreeSet<_> = pell.iter().map(|(_, m)| matrix_key(m)).collect();
    let b: BTreeSet<_> = enumerated.iter().map(matrix_key).collect();
    let identity = matrix_key(&IntMatrix::identity(5));
    let example = matrix_key(&CirculantFirstRow::from_i64(&[3, -2, 1, 1, -2]).to_matrix());
    ensure(a.contains(&identity) && b.contains(&identity), || "I_5 missing".into())?;
    ensure(a.contains(&example) && b.contains(&example), || "circulant(3,-2,1,1,-2) missing".into())?;
    for (s, m) in &pell {
        let p = phi_inverse(s).map_err(|e| e.to_string())?;
        ensure(&p.matrix() == m, || format!("phi_inverse({}, {}) mismatch", s.a, s.b))?;
        ensure(&phi(&p).map_err(|e| e.to_string())? == s, || format!("phi round trip fails at ({}, {})", s.a, s.b))?;
        ensure(SicupParams5::from_matrix(m).map_err(|e| e.to_string())? == p, || "from_matrix mismatch".into())?;
    }
    if a != b {
        let only_pell: Vec<String> = pell
            .iter()
            .filter(|(_, m)| !b.contains(&matrix_key(m)))
            .map(|(s, m)| format!("(a, b) = ({}, {}) with c1 = {}", s.a, s.b, m[(0, 0)]))
            .collect();
        return Err(format!(
            "sets differ: Pell gives {} matrices, enumeration to c1 <= 50 gives {}; only from Pell: {}; common part agrees: {}",
            a.len(),
            b.len(),
            only_pell.join(", "),
            b.is_subset(&a)
        ));
    }
    Ok(format!("{} matrices, phi round trip on all", a.len()))
}

fn criterion_2() -> Outcome {
    for d in 2..=4 {
        let found = enumerate_sicup(d, 20);
        ensure(found == vec![IntMatrix::identity(d)], || format!("d = {d}: {} matrices", found.len()))?;
    }
    Ok("only the identity for d = 2, 3, 4".into())
}

fn criterion_3() -> Outcome {
    let gamma = example_ten_braid();
    ensure(gamma.closure_components().count == 1, || "closure is not a knot".into())?;
    let delta = alexander_via_burau(&gamma).map_err(|e| e.to_string())?;
    ensure(delta == IntPoly::one(), || format!("Δ = {delta}"))?;
    ensure(delta.eval_i64(-1).abs().is_one(), || "|Δ(-1)| != 1".into())?;
    ensure(Diagram::from_braid(&gamma).alexander().map_err(|e| e.to_string())? == IntPoly::one(), || {
        "Wirtinger route disagrees".into()
    })?;
    let g5 = gamma.power(5);
    let l = linking_matrix_of_closure(&g5, 1).map_err(|e| e.to_string())?.matrix;
    let target = CirculantFirstRow::from_i64(&[3, -2, 1, 1, -2]).to_matrix();
    ensure(l == target, || format!("linking matrix {l}"))?;
    ensure(circulant_block_check(&l, 5, 1).map_err(|e| e.to_string())?, || "block check fails".into())?;
    let mirror_t25 = KnotClass::Mirror { of: Box::new(KnotClass::Torus2 { q: 5 }) };
    let info = nu_sharp(&mirror_t25, &Catalog::default());
    ensure(info.nu == Some(-3), || format!("nu(mirror T(2,5)) = {:?}", info.nu))?;
    let v = thm_nu_applies(&l.negate(), &vec![info; 5]).map_err(|e| e.to_string())?;
    ensure(v.applies && v.case == Some(1), || format!("{v:?}"))?;
    Ok(format!("Δ = 1, circulant(3,-2,1,1,-2), applies case 1 at component {}", v.witness_index.unwrap()))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures: Vec<(usize, String)> = Vec::new();
    let mut per_m = [(0usize, 0usize); 7];
    for _ in 0..200 {
        let m = rng.gen_range(1..=6);
        let c: Vec<i64> = (0..2 * m - 1)
            .map(|_| {
                let v = 2 * rng.gen_range(0..5) + 1;
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let p = SigmaParams::new(m, c.clone()).map_err(|e| e.to_string())?;
        per_m[m].0 += 1;
        let mut problems = Vec::new();
        let brute = brute_force_linking(&p).map_err(|e| e.to_string())?;
        let closed = CirculantFirstRow::from_i64(&closed_form_first_row(&p).row).to_matrix();
        if brute != closed {
            problems.push("closed form differs from diagram");
        }
        let d = sigma_diagram(&p);
        if d.permutation() != expected_connectivity(m) {
            problems.push("connectivity");
        }
        if d.closure_components().count != 1 {
            problems.push("closure not single-component");
        }
        match identify_l1(&p) {
            Ok(cert) if cert.matches_c_m => {}
            Ok(_) => problems.push("L1 is not T(2, c_m)"),
            Err(_) => problems.push("L1 not certified"),
        }
        if !problems.is_empty() {
            per_m[m].1 += 1;
            failures.push((m, format!("m = {m}, c = {c:?}: {}", problems.join("; "))));
        }
    }
    let summary: Vec<String> =
        (1..=6).map(|m| format!("m={m}: {}/{} ok", per_m[m].0 - per_m[m].1, per_m[m].0)).collect();
    if failures.is_empty() {
        Ok(format!("200 samples; {}", summary.join(", ")))
    } else {
        Err(format!("{} of 200 samples fail ({}); first: {}", failures.len(), summary.join(", "), failures[0].1))
    }
}

fn criterion_5() -> Outcome {
    let mut rows = 0;
    for nu in -5..=5 {
        for shape in [Shape::V, Shape::W] {
            let info = NuSharpInfo::new(nu, shape, "table");
            let threshold = match (nu, shape) {
                (0, Shape::W) => 1,
                (0, _) => -1,
                _ => nu,
            };
            let mut prev = false;
            for n in -10..=10 {
                let t = trace_map_trivial(&info, n).map_err(|e| e.to_string())?;
                ensure(!prev || t, || format!("not monotone at nu = {nu}, {shape:?}, n = {n}"))?;
                ensure(t == (n >= threshold), || format!("threshold wrong at nu = {nu}, {shape:?}, n = {n}"))?;
                prev = t;
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} rows"))
}

fn criterion_6() -> Outcome {
    let minus_i3 = IntMatrix::identity(3).negate();
    let b = blow_down(&minus_i3, 2).map_err(|e| e.to_string())?;
    ensure(b == IntMatrix::identity(2).negate(), || format!("blow_down gave {b}"))?;
    let cat = Catalog::default();
    let five_two = nu_sharp(&KnotClass::CatalogEntry { name: "5_2_negative_clasp".into() }, &cat);
    ensure(five_two.nu == Some(-1), || format!("catalog 5_2 nu = {:?}", five_two.nu))?;
    let other = nu_sharp(&KnotClass::Unknown { name: "second component".into() }, &cat);
    let v = thm_nu_applies(&b, &[five_two, other]).map_err(|e| e.to_string())?;
    ensure(v.applies && v.witness_index == Some(1) && v.case == Some(1), || format!("{v:?}"))?;
    Ok("-I_2, applies at component 1 (a11 = -1 >= nu = -1)".into())
}

fn criterion_7() -> Outcome {
    let f = TwoBridgeFraction::new(23, 7).unwrap();
    let cf = even_cf(&f);
    let v = seifert_from_even_cf(&cf);
    let delta = alexander_poly(&v);
    let mut problems = Vec::new();
    if cf.terms() != [-2, 2, -4, 2] {
        problems.push(format!("even_cf(23/7) = {:?}, expected [-2, 2, -4, 2]", cf.terms()));
    }
    if delta != IntPoly::from_i64(&[2, -6, 7, -6, 2]) {
        problems.push(format!("Δ = {delta}"));
    }
    let h5 = homology_order(&delta, 5).map_err(|e| e.to_string())?;
    let h2 = homology_order(&delta, 2).map_err(|e| e.to_string())?;
    if !h5.is_one() {
        problems.push(format!("|H1(Σ_5)| = {h5}"));
    }
    if h2 != BigInt::from(23) {
        problems.push(format!("|H1(Σ_2)| = {h2}"));
    }
    let mut sigs = Vec::new();
    for j in 1..5 {
        sigs.push(tl_signature(&v, 5, j).map_err(|e| format!("signature guard: {e}"))?);
    }
    if sigs.iter().all(|&s| s == 0) {
        problems.push("all signatures at d = 5 vanish".into());
    }
    if problems.is_empty() {
        Ok(format!("Δ = {delta}, orders 23 and 1, signatures {sigs:?}"))
    } else {
        Err(format!(
            "{}; other checks: Δ = {delta}, |H1(Σ_2)| = {h2}, |H1(Σ_5)| = {h5}, signatures {sigs:?}",
            problems.join("; ")
        ))
    }
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    for (p, q) in [(69, 19), (73, 23)] {
        let f = TwoBridgeFraction::new(p, q).unwrap();
        let v = seifert_from_even_cf(&even_cf(&f));
        let delta = alexander_poly(&v);
        let mut spheres = Vec::new();
        for d in 2..=8 {
            if homology_order(&delta, d).map_err(|e| e.to_string())?.is_one() {
                spheres.push(d);
            }
        }
        ensure(!spheres.is_empty(), || format!("{p}/{q}: no homology-sphere cover for d <= 8"))?;
        for &d in &spheres {
            for j in 1..d as u32 {
                let s = tl_signature(&v, d as u32, j).map_err(|e| format!("{p}/{q}, d = {d}, j = {j}: {e}"))?;
                ensure(s == 0, || format!("{p}/{q}: signature {s} at d = {d}, j = {j}"))?;
            }
        }
        notes.push(format!("{p}/{q}: d = {spheres:?}"));
    }
    Ok(format!("thin at {}", notes.join("; ")))
}

fn dense_eigenvalues(m: &IntMatrix) -> Vec<f64> {
    let rows = m.to_i64_rows().unwrap();
    let d = rows.len();
    let mut e: Vec<f64> =
        DMatrix::from_fn(d, d, |i, j| rows[i][j] as f64).symmetric_eigen().eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..100 {
        let d = 2 * rng.gen_range(0..=7) + 1;
        let half: Vec<i64> = (0..=d / 2).map(|_| rng.gen_range(-9..=9)).collect();
        let row: Vec<i64> = (0..d).map(|k| half[k.min(d - k)]).collect();
        let r = CirculantFirstRow::from_i64(&row);
        let s = circulant_spectrum(&r).map_err(|e| e.to_string())?;
        ensure(s.lambda1_exact == BigInt::from(row.iter().sum::<i64>()), || format!("case {case}: λ1 != row sum"))?;
        let dense = dense_eigenvalues(&r.to_matrix());
        let mut ours: Vec<f64> =
            s.eigenvalues.iter().flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity)).collect();
        ours.sort_by(f64::total_cmp);
        for (a, b) in ours.iter().zip(&dense) {
            ensure((a - b).abs() <= 1e-9, || format!("case {case}, row {row:?}: {a} vs {b}"))?;
        }
        if d == 5 {
            let det = det_exact(&r.to_matrix()).to_f64().unwrap();
            let (l1, l2, l3) = (s.eigenvalues[0].value, s.eigenvalues[1].value, s.eigenvalues[2].value);
            let prod = l1 * (l2 * l3).powi(2);
            ensure((det - prod).abs() <= 1e-6, || format!("row {row:?}: det {det} vs {prod}"))?;
        }
    }
    for (s, m) in enumerate_m5(6) {
        let sp = circulant_spectrum(&covers::matrices::first_row(&m)).map_err(|e| e.to_string())?;
        let det = det_exact(&m).to_f64().unwrap();
        let prod = sp.eigenvalues[0].value * (sp.eigenvalues[1].value * sp.eigenvalues[2].value).powi(2);
        ensure((det - prod).abs() <= 1e-6, || format!("Pell matrix a = {}: det {det} vs {prod}", s.a))?;
    }
    Ok("100 rows, d <= 15".into())
}

fn cofactor(m: &[Vec<i64>]) -> i128 {
    if m.len() == 1 {
        return m[0][0] as i128;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] as i128 * cofactor(&minor)
        })
        .sum()
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for case in 0..100 {
        let n = 1 + case % 5;
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
        ensure(det_exact(&m) == BigInt::from(cofactor(&rows)), || format!("det mismatch on {rows:?}"))?;
    }
    for _ in 0..200 {
        let n = rng.gen_range(2..=9usize);
        let letters: Vec<i64> = (0..rng.gen_range(0..30))
            .map(|_| rng.gen_range(1..n as i64) * if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        let w = BraidWord::new(n, letters).map_err(|e| e.to_string())?;
        let follow: Vec<usize> = (0..n)
            .map(|s| {
                w.letters().iter().fold(s + 1, |pos, &l| {
                    let g = l.unsigned_abs() as usize;
                    if pos == g {
                        g + 1
                    } else if pos == g + 1 {
                        g
                    } else {
                        pos
                    }
                }) - 1
            })
            .collect();
        ensure(braid_permutation(&w).0 == follow, || format!("permutation mismatch on {w}"))?;
    }
    let mut brute = BTreeSet::new();
    for a in -10_000i64..=10_000 {
        for b in -10_000i64..=10_000 {
            if a * a - 5 * b * b == 4 {
                brute.insert((a, b));
            }
        }
    }
    let generated: BTreeSet<(i64, i64)> = solve_pell_5_4(brute.len() + 8, None, false)
        .iter()
        .map(|s| (s.a.to_i64().unwrap(), s.b.to_i64().unwrap()))
        .filter(|(a, b)| a.abs() <= 10_000 && b.abs() <= 10_000)
        .collect();
    ensure(generated == brute, || format!("Pell: {} generated vs {} brute", generated.len(), brute.len()))?;
    Ok(format!("100 determinants, 200 braids, {} Pell solutions", brute.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 Pell/SICUP bijection", criterion_1, Duration::from_secs(10)),
        ("2 uniqueness for small d", criterion_2, Duration::from_secs(30)),
        ("3 ten-braid example", criterion_3, Duration::from_secs(5)),
        ("4 sigma closed forms", criterion_4, Duration::from_secs(60)),
        ("5 trace-map truth table", criterion_5, Duration::from_secs(1)),
        ("6 blow-down example", criterion_6, Duration::from_secs(1)),
        ("7 8_6 invariants", criterion_7, Duration::from_secs(5)),
        ("8 thin signatures", criterion_8, Duration::from_secs(10)),
        ("9 spectral identities", criterion_9, Duration::from_secs(10)),
        ("10 oracle equivalences", criterion_10, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.2?} > {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
