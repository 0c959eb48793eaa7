use covers::floer::{
    adapted_inequalities, mirror_data, nu_sharp, thm_nu_applies, trace_map_trivial, AdaptedCondition, Catalog,
    KnotClass, NuSharpInfo, Shape,
};
use covers::matrices::{
    blow_down, circulant_from_first_row, circulant_spectrum, det_exact, enumerate_sicup, first_row, is_circulant,
    reversed_row, verify_sicup, CirculantFirstRow, IntMatrix,
};
use covers::pell::{phi, phi_inverse, solve_pell_5_4};
use covers::sigma::{
    brute_force_linking, closed_form_first_row, expected_connectivity, identify_l1, sigma_diagram, SigmaParams,
};
use covers::tangle::{
    alexander_via_burau, braid_permutation, circulant_block_check, linking_matrix_of_closure, BraidWord, Diagram,
};
use covers::twobridge::{
    alexander_poly, even_cf, homology_order, seifert_from_even_cf, tl_signature, SeifertMatrix, TwoBridgeFraction,
};
use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec((1..n as i64, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            BraidWord::new(n, ls.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect()).unwrap()
        })
    })
}

fn symmetric_row(d: usize) -> impl Strategy<Value = CirculantFirstRow> {
    prop::collection::vec(-9i64..=9, d / 2 + 1)
        .prop_map(move |half| CirculantFirstRow::from_i64(&(0..d).map(|k| half[k.min(d - k)]).collect::<Vec<_>>()))
}

fn odd_c(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec((0i64..5, any::<bool>()), len)
        .prop_map(|v| v.into_iter().map(|(k, s)| if s { 2 * k + 1 } else { -(2 * k + 1) }).collect())
}

fn sigma_params(ms: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SigmaParams> {
    ms.prop_flat_map(|m| odd_c(2 * m - 1).prop_map(move |c| SigmaParams::new(m, c).unwrap()))
}

fn fraction() -> impl Strategy<Value = TwoBridgeFraction> {
    (3i64..=101)
        .prop_filter("odd p", |p| p % 2 == 1)
        .prop_flat_map(|p| (Just(p), 1..p))
        .prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
        .prop_map(|(p, q)| TwoBridgeFraction::new(p, q).unwrap())
}

fn seifert(f: &TwoBridgeFraction) -> SeifertMatrix {
    seifert_from_even_cf(&even_cf(f))
}

/// Signature of `(1 - ω)V + (1 - ω̄)Vᵀ` from a dense Hermitian eigensolver.
fn float_signature(v: &SeifertMatrix, theta: f64) -> Option<i64> {
    let n = v.size();
    let w = Complex::new(theta.cos(), theta.sin());
    let one = Complex::new(1.0, 0.0);
    let h = DMatrix::from_fn(n, n, |r, c| (one - w) * v.0[r][c] as f64 + (one - w.conj()) * v.0[c][r] as f64);
    let eig = h.symmetric_eigen().eigenvalues;
    if eig.iter().any(|e| e.abs() < 1e-8) {
        return None;
    }
    Some(eig.iter().map(|e| if *e > 0.0 { 1 } else { -1 }).sum())
}

/// `e^{-igθ} Δ(e^{iθ})`, real for a palindromic `Δ` of degree `2g`.
fn real_alexander(delta: &covers::poly::IntPoly, theta: f64) -> f64 {
    let g = delta.degree() as f64 / 2.0;
    let (re, im) = delta.to_laurent().eval_complex(theta.cos(), theta.sin());
    re * (g * theta).cos() + im * (g * theta).sin()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_count_is_cycle_count(w in word(8, 20), d in 1usize..=7) {
        let cycles = braid_permutation(&w).pow(d).cycles().len();
        prop_assert_eq!(w.power(d).closure_components().count, cycles);
        prop_assert_eq!(Diagram::from_braid(&w).power(d).closure_components().count, cycles);
    }

    #[test]
    fn linking_is_conjugation_invariant(w in word(6, 16), c in word(6, 8)) {
        prop_assume!(w.strands() == c.strands());
        let conj = c.concat(&w).unwrap().concat(&c.inverse()).unwrap();
        let lw = linking_matrix_of_closure(&w, 1).unwrap();
        let lc = linking_matrix_of_closure(&conj, 1).unwrap();
        let (cw, cc) = (w.closure_components(), conj.closure_components());
        let pc = braid_permutation(&c);
        let n = w.strands();
        for p in 0..n {
            for q in 0..n {
                let ours = &lc.matrix[(cc.labeling[p] - 1, cc.labeling[q] - 1)];
                let theirs = &lw.matrix[(cw.labeling[pc.apply(p)] - 1, cw.labeling[pc.apply(q)] - 1)];
                prop_assert_eq!(ours, theirs);
            }
        }
    }

    #[test]
    fn linking_rows_sum_to_framing(w in word(7, 24), framing in -5i64..=5) {
        let m = linking_matrix_of_closure(&w, framing).unwrap().matrix;
        for i in 0..m.dim() {
            let s: BigInt = m.row(i).iter().sum();
            prop_assert_eq!(s, BigInt::from(framing));
        }
        prop_assert!(m.is_symmetric());
    }

    #[test]
    fn knot_alexander_is_symmetric(w in word(5, 14)) {
        prop_assume!(w.closure_components().count == 1);
        let delta = alexander_via_burau(&w).unwrap();
        prop_assert!(delta.is_palindromic());
        prop_assert!(delta.eval_i64(1).abs().is_one());
        prop_assert_eq!(Diagram::from_braid(&w).alexander().unwrap(), delta);
    }

    #[test]
    fn circulant_round_trip(d in 1usize..=9, row in prop::collection::vec(-9i64..=9, 1..=9)) {
        let row = CirculantFirstRow::from_i64(&row[..row.len().min(d)]);
        let m = circulant_from_first_row(&row);
        prop_assert!(is_circulant(&m));
        prop_assert_eq!(first_row(&m), row);
    }

    #[test]
    fn sicup_verdict_forces_unit_spectrum(row in (1usize..=4).prop_flat_map(|r| symmetric_row(2 * r + 1))) {
        let m = row.to_matrix();
        let rep = verify_sicup(&m);
        if rep.verdict {
            prop_assert!(rep.lambda1.is_one());
            prop_assert!(det_exact(&m).is_one());
            prop_assert!(m.leading_minors().iter().all(|x| x.is_positive()));
        }
    }

    #[test]
    fn five_by_five_det_is_eigen_product(row in symmetric_row(5)) {
        let s = circulant_spectrum(&row).unwrap();
        let det = det_exact(&row.to_matrix()).to_f64().unwrap();
        let (l1, l2, l3) = (s.eigenvalues[0].value, s.eigenvalues[1].value, s.eigenvalues[2].value);
        prop_assert!((det - l1 * (l2 * l3).powi(2)).abs() <= 1e-6 * det.abs().max(1.0));
    }

    #[test]
    fn blow_down_preserves_det(n in 2usize..=5, k in 0usize..5, unit in prop::bool::ANY,
                               entries in prop::collection::vec(-6i64..=6, 25)) {
        let k = k % n;
        let m = IntMatrix::from_fn(n, |i, j| {
            if i == k && j == k {
                BigInt::from(if unit { 1 } else { -1 })
            } else {
                BigInt::from(entries[i.min(j) * 5 + i.max(j)])
            }
        });
        let b = blow_down(&m, k).unwrap();
        prop_assert!(b.is_symmetric());
        prop_assert_eq!(det_exact(&b).abs(), det_exact(&m).abs());
    }

    #[test]
    fn trace_map_monotone(nu in -5i64..=5, w_shape in any::<bool>()) {
        let shape = if w_shape { Shape::W } else { Shape::V };
        let info = NuSharpInfo::new(nu, shape, "test");
        let values: Vec<bool> = (-10..=10).map(|n| trace_map_trivial(&info, n).unwrap()).collect();
        for pair in values.windows(2) {
            prop_assert!(!pair[0] || pair[1]);
        }
        let threshold = if nu != 0 { nu } else if w_shape { 1 } else { -1 };
        for (i, n) in (-10..=10).enumerate() {
            prop_assert_eq!(values[i], n >= threshold);
        }
    }

    #[test]
    fn mirror_is_an_involution(q in prop::sample::select(vec![3i64, 5, 7, 9, 11]), depth in 0usize..4) {
        let cat = Catalog::default();
        for base in [KnotClass::Torus2 { q }, KnotClass::Unknot, KnotClass::CatalogEntry { name: "5_2_negative_clasp".into() }] {
            let mut k = base.clone();
            for _ in 0..depth {
                k = KnotClass::Mirror { of: Box::new(k) };
            }
            let twice = KnotClass::Mirror { of: Box::new(KnotClass::Mirror { of: Box::new(k.clone()) }) };
            let (a, b) = (nu_sharp(&k, &cat), nu_sharp(&twice, &cat));
            prop_assert_eq!((a.nu, a.shape), (b.nu, b.shape));
        }
    }

    #[test]
    fn adapted_dual_to_theorem(a in -8i64..=8, nu in -5i64..=5, w_shape in any::<bool>()) {
        let info = NuSharpInfo::new(nu, if w_shape { Shape::W } else { Shape::V }, "test");
        let cond = adapted_inequalities(a, &info);
        let (neg, mirrored) = mirror_data(&IntMatrix::from_i64([[a]]), std::slice::from_ref(&info));
        if a.abs() == 1 && a > 0 {
            let v = thm_nu_applies(&neg, &mirrored).unwrap();
            prop_assert_eq!(cond.is_satisfied(), v.applies);
            if let AdaptedCondition::Satisfied { case } = cond {
                prop_assert_eq!(v.case, Some(case));
            }
        }
        // the same comparison on a diagonal, always negative definite after negation
        let d = IntMatrix::from_i64([[a.max(1), 0], [0, 1]]);
        if a >= 1 {
            let infos = [info.clone(), NuSharpInfo::new(-100, Shape::V, "blocker")];
            let (neg, mirrored) = mirror_data(&d, &infos);
            if det_exact(&d).is_one() {
                let v = thm_nu_applies(&neg, &mirrored).unwrap();
                prop_assert_eq!(cond.is_satisfied(), v.applies);
            }
        }
    }

    #[test]
    fn even_cf_round_trip(f in fraction()) {
        let cf = even_cf(&f);
        prop_assert!(cf.terms().iter().all(|a| a % 2 == 0 && *a != 0));
        prop_assert_eq!(cf.terms().len() % 2, 0);
        let (p, q) = cf.evaluate();
        let back = TwoBridgeFraction::new(p.to_i64().unwrap(), q.to_i64().unwrap()).unwrap();
        prop_assert!(back.is_equivalent(&f));
    }

    #[test]
    fn two_bridge_alexander(f in fraction()) {
        let delta = alexander_poly(&seifert(&f));
        prop_assert!(delta.is_palindromic());
        prop_assert!(delta.eval_i64(1).abs().is_one());
        let p = BigInt::from(f.p);
        prop_assert_eq!(homology_order(&delta, 2).unwrap(), p.clone());
        prop_assert_eq!(delta.eval_i64(-1).abs(), p);
    }

    #[test]
    fn signature_symmetry_and_parity(f in fraction(), d in 2u32..=9) {
        let v = seifert(&f);
        let delta = alexander_poly(&v);
        prop_assume!(!homology_order(&delta, d as i64).unwrap().is_zero());
        for j in 1..d {
            let s = tl_signature(&v, d, j).unwrap();
            prop_assert_eq!(s % 2, 0);
            prop_assert_eq!(s, tl_signature(&v, d, d - j).unwrap());
            let theta = std::f64::consts::TAU * j as f64 / d as f64;
            if let Some(oracle) = float_signature(&v, theta) {
                prop_assert_eq!(s, oracle, "d = {}, j = {}", d, j);
            }
        }
    }

    #[test]
    fn signature_jumps_only_at_alexander_roots(f in fraction(), d in 2u32..=7) {
        let v = seifert(&f);
        let delta = alexander_poly(&v);
        let samples = 48;
        for j in 0..d {
            let start = std::f64::consts::TAU * j as f64 / d as f64;
            let step = std::f64::consts::TAU / d as f64 / samples as f64;
            let mut prev: Option<(i64, f64)> = None;
            for s in 1..samples {
                let theta = start + step * s as f64;
                let (Some(sig), val) = (float_signature(&v, theta), real_alexander(&delta, theta)) else {
                    prev = None;
                    continue;
                };
                if let Some((psig, pval)) = prev {
                    if psig != sig {
                        prop_assert!(psig.signum() != sig.signum() || pval * val <= 0.0 || val.abs() < 1e-6 || pval.abs() < 1e-6,
                            "jump {} -> {} without a root of Δ near θ = {}", psig, sig, theta);
                    }
                }
                prev = Some((sig, val));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_structure(p in sigma_params(1..=6)) {
        let m = p.m();
        let d = sigma_diagram(&p);
        prop_assert_eq!(d.permutation(), expected_connectivity(m));
        prop_assert_eq!(d.closure_components().count, 1);
        prop_assert_eq!(d.power(m).closure_components().count, m);
        let brute = brute_force_linking(&p).unwrap();
        prop_assert!(circulant_block_check(&brute, m, 1).unwrap());
    }

    #[test]
    fn sigma_closed_form_for_m_at_least_three(p in sigma_params(3..=6)) {
        let brute = brute_force_linking(&p).unwrap();
        let closed = closed_form_first_row(&p);
        prop_assert_eq!(first_row(&brute), CirculantFirstRow::from_i64(&closed.row));
        let cert = identify_l1(&p).unwrap();
        prop_assert!(cert.matches_c_m);
        if p.c_m() >= 3 {
            let info = nu_sharp(&cert.knot, &Catalog::default());
            prop_assert_eq!(info.nu, Some(2 * cert.genus as i64 - 1));
            prop_assert_eq!(info.nu, Some(p.c_m() - 2));
        }
    }
}

#[test]
fn enumeration_closed_under_reversal() {
    for (d, bound) in [(3, 12), (5, 40), (7, 8)] {
        let rows: Vec<CirculantFirstRow> = enumerate_sicup(d, bound).iter().map(first_row).collect();
        for r in &rows {
            assert!(rows.contains(&reversed_row(r)), "{r:?}");
        }
    }
}

#[test]
fn pell_bijection_properties() {
    let sols = solve_pell_5_4(12, Some(2), true);
    assert!(sols.len() >= 6);
    for s in &sols {
        let two = BigInt::from(2);
        let fb = BigInt::from(5) * &s.b;
        let x5: BigInt = &two * &s.a + 1;
        assert!((x5 % BigInt::from(5)).is_zero());
        assert!(((&two - &s.a + &fb) % BigInt::from(10)).is_zero());
        assert!(((&two - &s.a - &fb) % BigInt::from(10)).is_zero());
        let params = phi_inverse(s).unwrap();
        assert_eq!(&phi(&params).unwrap(), s);
        let x = params.x.to_f64().unwrap();
        let (l, m) = (params.l.to_f64().unwrap(), params.m.to_f64().unwrap());
        let sp = circulant_spectrum(&params.first_row()).unwrap();
        let (l2, l3) = (sp.eigenvalues[1].value, sp.eigenvalues[2].value);
        let a = s.a.to_f64().unwrap();
        assert!((l2 + l3 - a).abs() <= 1e-9 * a.max(1.0));
        assert!((2.0 * x - l - m - a).abs() < 0.5);
        assert!((l2 * l3 - 1.0).abs() <= 1e-6 * a * a);
        assert!(verify_sicup(&params.matrix()).verdict);
    }
}
