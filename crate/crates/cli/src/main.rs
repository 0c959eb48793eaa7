use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use covers::floer::{
    adapted_inequalities, cover_factorization, nu_sharp, thm_nu_applies, trace_map_trivial, Catalog, KnotClass,
    NuSharpInfo, Shape, CATALOG_ENV,
};
use covers::matrices::{enumerate_sicup_rows, verify_sicup, CirculantFirstRow, IntMatrix};
use covers::pell::{enumerate_m5, phi_inverse, solve_pell_5_4, SicupParams5};
use covers::pipeline::branched_cover_pipeline;
use covers::serde_int::to_value as int_json;
use covers::sigma::{
    brute_force_linking, check_adapted, closed_form_first_row, expected_connectivity, identify_l1, sigma_diagram,
    SigmaParams,
};
use covers::tangle::{
    alexander_via_burau, circulant_block_check, linking_matrix_of_closure, unknot_necessary_check,
    unknot_necessary_check_diagram, BraidWord,
};
use covers::twobridge::{
    alexander_poly, branched_cover_report, even_cf, seifert_from_even_cf, TwoBridgeFraction, CF_CONVENTION,
};
use covers::Error;

#[derive(Parser, Debug)]
#[command(
    name = "covers",
    version,
    about = "SICUP matrices, braid closures, nu-sharp predicates and two-bridge invariants"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Accepted for compatibility; output is always JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel library routines.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    #[command(subcommand)]
    Sicup(SicupCmd),
    #[command(subcommand)]
    Pell(PellCmd),
    #[command(subcommand)]
    Tangle(TangleCmd),
    #[command(subcommand)]
    Sigma(SigmaCmd),
    #[command(subcommand)]
    Floer(FloerCmd),
    #[command(subcommand)]
    Twobridge(TwoBridgeCmd),
    #[command(subcommand)]
    Pipeline(PipelineCmd),
}

#[derive(Subcommand, Debug)]
enum SicupCmd {
    /// Check the five SICUP properties.
    Verify {
        /// First row of a circulant, e.g. 3,-2,1,1,-2.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "matrix", required_unless_present = "matrix")]
        first_row: Option<String>,
        /// JSON file holding an array of rows.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// All SICUP matrices of a size with diagonal entry at most c1-max.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        c1_max: i64,
    },
}

#[derive(Subcommand, Debug)]
enum PellCmd {
    /// Solutions of a^2 - 5b^2 = 4.
    Solve {
        #[arg(long)]
        count: usize,
        /// Only a > 0 with a = 2 mod 5, each paired with its matrix.
        #[arg(long)]
        admissible: bool,
    },
    /// The first 5x5 SICUP matrices in Pell order.
    M5 {
        #[arg(long)]
        count: usize,
    },
}

#[derive(Args, Debug)]
struct BraidArgs {
    /// Comma-separated letters, e.g. 1,-2,1,-2.
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    #[arg(long)]
    strands: usize,
}

#[derive(Subcommand, Debug)]
enum TangleCmd {
    /// Components of the closure of a power of the braid.
    Components {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Linking matrix of the closure of a power of the braid.
    Linking {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        framing: i64,
    },
    /// Necessary test that the closure is the unknot.
    UnknotCheck {
        #[command(flatten)]
        braid: BraidArgs,
    },
}

#[derive(Args, Debug)]
struct SigmaArgs {
    #[arg(long)]
    m: usize,
    /// The 2m-1 odd twist parameters, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    c: String,
}

#[derive(Subcommand, Debug)]
enum SigmaCmd {
    /// Compare closed forms with the diagram, certify L1, optionally test adaptedness.
    Check {
        #[command(flatten)]
        sigma: SigmaArgs,
        /// JSON matrix to test adaptedness against.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Linking matrix of the closure of the m-th power.
    Linking {
        #[command(flatten)]
        sigma: SigmaArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ShapeArg {
    V,
    W,
    Unknown,
}

impl From<ShapeArg> for Shape {
    fn from(s: ShapeArg) -> Shape {
        match s {
            ShapeArg::V => Shape::V,
            ShapeArg::W => Shape::W,
            ShapeArg::Unknown => Shape::Unknown,
        }
    }
}

#[derive(Subcommand, Debug)]
enum FloerCmd {
    /// nu-sharp and shape of a knot: unknot, T(2,q), mirror(K) or a catalog name.
    Nu {
        #[arg(long)]
        knot: String,
    },
    /// Whether the n-trace cobordism map vanishes.
    TraceTrivial {
        #[arg(long, allow_hyphen_values = true)]
        nu: i64,
        #[arg(long, value_enum, ignore_case = true)]
        shape: ShapeArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Hypotheses of the surgery theorem for a negative definite matrix.
    ThmNu {
        #[arg(long)]
        matrix: PathBuf,
        /// JSON array of knot descriptions or {"nu", "shape"} records.
        #[arg(long)]
        components: PathBuf,
    },
    /// The adaptedness inequality for a diagonal entry.
    Adapted {
        #[arg(long, allow_hyphen_values = true)]
        a11: i64,
        #[arg(long)]
        knot: String,
    },
    /// g = gcd(w, d) and d' = d / g.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
    },
}

#[derive(Subcommand, Debug)]
enum TwoBridgeCmd {
    /// Even continued fraction.
    Cf {
        #[arg(long, allow_hyphen_values = true)]
        fraction: String,
    },
    /// Seifert matrix and Alexander polynomial.
    Alexander {
        #[arg(long, allow_hyphen_values = true)]
        fraction: String,
    },
    /// Homology orders and signatures of cyclic branched covers.
    Report {
        #[arg(long, allow_hyphen_values = true)]
        fraction: String,
        #[arg(long, default_value_t = 6)]
        dmax: i64,
    },
}

#[derive(Subcommand, Debug)]
enum PipelineCmd {
    /// Braid -> linking matrix -> SICUP -> surgery theorem on the mirror.
    BranchedCover {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long)]
        power: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        framing: i64,
        /// Knot type of every component of the powered closure.
        #[arg(long, conflicts_with = "components", required_unless_present = "components")]
        component_knot: Option<String>,
        /// JSON array with one entry per component.
        #[arg(long)]
        components: Option<PathBuf>,
    },
}

#[derive(Serialize, Debug)]
struct Report {
    command: String,
    inputs: Value,
    result: Value,
    provenance: Vec<String>,
    warnings: Vec<String>,
}

struct Outcome {
    report: Report,
    positive: bool,
}

impl Outcome {
    fn new(command: &str, inputs: Value, result: Value, positive: bool) -> Self {
        Outcome {
            report: Report { command: command.into(), inputs, result, provenance: Vec::new(), warnings: Vec::new() },
            positive,
        }
    }

    fn provenance(mut self, p: impl Into<String>) -> Self {
        self.report.provenance.push(p.into());
        self
    }

    fn warning(mut self, w: impl Into<String>) -> Self {
        self.report.warnings.push(w.into());
        self
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComponentSpec {
    Knot(String),
    Record { nu: Option<i64>, shape: Shape },
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn with_fields<const N: usize>(mut v: Value, fields: [(&str, Value); N]) -> Value {
    if let Value::Object(o) = &mut v {
        for (k, x) in fields {
            o.insert(k.to_string(), x);
        }
    }
    v
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Error> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&s).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

fn component_infos(specs: Vec<ComponentSpec>, catalog: &Catalog) -> Result<Vec<NuSharpInfo>, Error> {
    specs
        .into_iter()
        .map(|s| match s {
            ComponentSpec::Knot(k) => Ok(nu_sharp(&k.parse::<KnotClass>()?, catalog)),
            ComponentSpec::Record { nu, shape } => Ok(NuSharpInfo { nu, shape, provenance: "user record".into() }),
        })
        .collect()
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let catalog = Catalog::from_env()?;
    let catalog_note = match std::env::var_os(CATALOG_ENV) {
        Some(p) => format!("nu catalog: built-in merged with {}", Path::new(&p).display()),
        None => "nu catalog: built-in".to_string(),
    };
    match cli.command {
        Command::Sicup(SicupCmd::Verify { first_row, matrix }) => {
            let m = match (&first_row, &matrix) {
                (Some(r), _) => r.parse::<CirculantFirstRow>()?.to_matrix(),
                (None, Some(p)) => read_json::<IntMatrix>(p)?,
                (None, None) => return Err(Error::Parse("give --first-row or --matrix".into())),
            };
            let report = verify_sicup(&m);
            let positive = report.verdict;
            Ok(Outcome::new(
                "sicup verify",
                json!({ "first_row": first_row, "matrix": matrix }),
                json!({ "matrix": m, "report": report }),
                positive,
            )
            .provenance("exact Bareiss determinant and leading minors"))
        }
        Command::Sicup(SicupCmd::Enumerate { size, c1_max }) => {
            let e = enumerate_sicup_rows(size, c1_max);
            let matrices = e.matrices();
            Ok(Outcome::new(
                "sicup enumerate",
                json!({ "size": size, "c1_max": c1_max }),
                json!({ "count": matrices.len(), "enumeration": e, "matrices": matrices }),
                true,
            )
            .provenance("row-sum 1 and |c_j| <= c_1 bound the search"))
        }
        Command::Pell(PellCmd::Solve { count, admissible }) => {
            let sols =
                if admissible { solve_pell_5_4(count, Some(2), true) } else { solve_pell_5_4(count, None, false) };
            let items: Vec<Value> = sols
                .iter()
                .map(|s| {
                    let matrix = phi_inverse(s).ok().map(|p| p.matrix());
                    with_fields(to_json(s), [("matrix", to_json(&matrix))])
                })
                .collect();
            Ok(Outcome::new("pell solve", json!({ "count": count, "admissible": admissible }), json!(items), true)
                .provenance("ordered by |a|, positive a first, then b descending"))
        }
        Command::Pell(PellCmd::M5 { count }) => {
            let items: Vec<Value> = enumerate_m5(count)
                .into_iter()
                .map(|(s, m)| {
                    let p = SicupParams5::from_matrix(&m).expect("circulant");
                    let mut v = with_fields(to_json(&s), [("matrix", to_json(&m))]);
                    if let (Value::Object(o), Value::Object(q)) = (&mut v, to_json(&p)) {
                        o.extend(q);
                    }
                    v
                })
                .collect();
            Ok(Outcome::new("pell m5", json!({ "count": count }), json!(items), true)
                .provenance("phi inverse: x = (2a+1)/5, l = (2-a+5b)/10, m = (2-a-5b)/10"))
        }
        Command::Tangle(TangleCmd::Components { braid, power }) => {
            let w = BraidWord::parse(&braid.braid, braid.strands)?.power(power);
            let c = w.closure_components();
            Ok(Outcome::new(
                "tangle components",
                json!({ "braid": braid.braid, "strands": braid.strands, "power": power }),
                json!({ "count": c.count, "labeling": c.labeling, "permutation": w.permutation().to_one_based() }),
                true,
            )
            .provenance("component 1 contains strand position 1; ids ordered by least position"))
        }
        Command::Tangle(TangleCmd::Linking { braid, power, framing }) => {
            let w = BraidWord::parse(&braid.braid, braid.strands)?.power(power);
            let r = linking_matrix_of_closure(&w, framing)?;
            let blocks = circulant_block_check(&r.matrix, r.matrix.dim(), 1)?;
            Ok(Outcome::new(
                "tangle linking",
                json!({ "braid": braid.braid, "strands": braid.strands, "power": power, "framing": framing }),
                json!({ "linking": r, "circulant": blocks }),
                true,
            )
            .provenance(format!("diagonal from the row-sum rule with base framing {framing}"))
            .provenance("off-diagonal entries are half the signed inter-component crossing sums"))
        }
        Command::Tangle(TangleCmd::UnknotCheck { braid }) => {
            let w = BraidWord::parse(&braid.braid, braid.strands)?;
            let check = unknot_necessary_check(&w);
            let alexander = alexander_via_burau(&w).ok();
            let positive = check.passed();
            Ok(Outcome::new(
                "tangle unknot-check",
                json!({ "braid": braid.braid, "strands": braid.strands }),
                json!({ "check": check, "alexander": alexander }),
                positive,
            )
            .provenance("reduced Burau representation")
            .warning("necessary, not sufficient"))
        }
        Command::Sigma(SigmaCmd::Check { sigma, target }) => {
            let p = SigmaParams::new(sigma.m, parse_ints(&sigma.c)?)?;
            let inputs = json!({ "m": sigma.m, "c": sigma.c, "target": target });
            if let Some(path) = target {
                let a: IntMatrix = read_json(&path)?;
                let r = check_adapted(&p, &a, &catalog)?;
                let positive = r.verdict;
                let mut out = Outcome::new("sigma check", inputs, to_json(&r), positive).provenance(catalog_note);
                if !r.target_is_sicup {
                    out = out.warning("target matrix is not SICUP");
                }
                return Ok(out.warning("unknot test is necessary, not sufficient"));
            }
            let d = sigma_diagram(&p);
            let connectivity = d.permutation() == expected_connectivity(p.m());
            let closed = closed_form_first_row(&p);
            let brute = brute_force_linking(&p)?;
            let agree = brute == CirculantFirstRow::from_i64(&closed.row).to_matrix();
            let l1 = identify_l1(&p);
            let unknot = unknot_necessary_check_diagram(&d);
            let positive = connectivity && agree && unknot.passed() && l1.as_ref().is_ok_and(|c| c.matches_c_m);
            Ok(Outcome::new(
                "sigma check",
                inputs,
                json!({
                    "connectivity": d.permutation().to_one_based(),
                    "connectivity_matches": connectivity,
                    "closed_form": closed,
                    "brute_force": brute,
                    "agree": agree,
                    "first_component": l1.map_err(|e| e.to_string()),
                    "unknot_check": unknot,
                }),
                positive,
            )
            .provenance("a_11 completed from row sum 1"))
        }
        Command::Sigma(SigmaCmd::Linking { sigma }) => {
            let p = SigmaParams::new(sigma.m, parse_ints(&sigma.c)?)?;
            let brute = brute_force_linking(&p)?;
            Ok(Outcome::new(
                "sigma linking",
                json!({ "m": sigma.m, "c": sigma.c }),
                json!({ "matrix": brute, "closed_form": closed_form_first_row(&p) }),
                true,
            )
            .provenance("diagonal from the row-sum rule with base framing 1"))
        }
        Command::Floer(FloerCmd::Nu { knot }) => {
            let k: KnotClass = knot.parse()?;
            let info = nu_sharp(&k, &catalog);
            let positive = info.nu.is_some();
            Ok(Outcome::new("floer nu", json!({ "knot": knot }), json!({ "knot": k, "info": info }), positive)
                .provenance(catalog_note))
        }
        Command::Floer(FloerCmd::TraceTrivial { nu, shape, n }) => {
            let info = NuSharpInfo::new(nu, shape.into(), "command line");
            let inputs = json!({ "nu": nu, "shape": Shape::from(shape), "n": n });
            match trace_map_trivial(&info, n) {
                Ok(t) => Ok(Outcome::new("floer trace-trivial", inputs, json!({ "trivial": t }), t)),
                Err(e @ (Error::InconclusiveShape | Error::UnknownNu)) => Ok(Outcome::new(
                    "floer trace-trivial",
                    inputs,
                    json!({ "trivial": Value::Null, "inconclusive": e.to_string() }),
                    false,
                )),
                Err(e) => Err(e),
            }
        }
        Command::Floer(FloerCmd::ThmNu { matrix, components }) => {
            let a: IntMatrix = read_json(&matrix)?;
            let comps = component_infos(read_json(&components)?, &catalog)?;
            let v = thm_nu_applies(&a, &comps)?;
            let positive = v.applies;
            Ok(Outcome::new(
                "floer thm-nu",
                json!({ "matrix": matrix, "components": components }),
                json!({ "verdict": v, "components": comps }),
                positive,
            )
            .provenance(catalog_note))
        }
        Command::Floer(FloerCmd::Adapted { a11, knot }) => {
            let info = nu_sharp(&knot.parse::<KnotClass>()?, &catalog);
            let cond = adapted_inequalities(a11, &info);
            Ok(Outcome::new(
                "floer adapted",
                json!({ "a11": a11, "knot": knot }),
                json!({ "condition": cond, "info": info }),
                cond.is_satisfied(),
            )
            .provenance(catalog_note))
        }
        Command::Floer(FloerCmd::Factor { d, w }) => {
            let inputs = json!({ "d": d, "w": w });
            match cover_factorization(d, w) {
                Ok(f) => Ok(Outcome::new("floer factor", inputs, to_json(&f), true)),
                Err(e @ Error::FactorizationNotCoprime { .. }) => {
                    Ok(Outcome::new("floer factor", inputs, json!({ "violation": e.to_string() }), false))
                }
                Err(e) => Err(e),
            }
        }
        Command::Twobridge(TwoBridgeCmd::Cf { fraction }) => {
            let f: TwoBridgeFraction = fraction.parse()?;
            let cf = even_cf(&f);
            let (p, q) = cf.evaluate();
            Ok(Outcome::new(
                "twobridge cf",
                json!({ "fraction": fraction }),
                json!({ "even_cf": cf, "value": [int_json(&p), int_json(&q)] }),
                true,
            )
            .provenance(format!("convention {CF_CONVENTION}")))
        }
        Command::Twobridge(TwoBridgeCmd::Alexander { fraction }) => {
            let f: TwoBridgeFraction = fraction.parse()?;
            let v = seifert_from_even_cf(&even_cf(&f));
            let delta = alexander_poly(&v);
            let det = int_json(&delta.eval_i64(-1));
            Ok(Outcome::new(
                "twobridge alexander",
                json!({ "fraction": fraction }),
                json!({ "seifert": v, "alexander": delta, "determinant": det }),
                true,
            )
            .provenance(format!("convention {CF_CONVENTION}")))
        }
        Command::Twobridge(TwoBridgeCmd::Report { fraction, dmax }) => {
            let f: TwoBridgeFraction = fraction.parse()?;
            let r = branched_cover_report(&f, dmax)?;
            Ok(Outcome::new("twobridge report", json!({ "fraction": fraction, "dmax": dmax }), to_json(&r), true)
                .provenance(format!("convention {CF_CONVENTION}"))
                .provenance("homology order by exact resultant; signatures exact in the cyclotomic field"))
        }
        Command::Pipeline(PipelineCmd::BranchedCover { braid, power, framing, component_knot, components }) => {
            let w = BraidWord::parse(&braid.braid, braid.strands)?;
            let comps = match (&component_knot, &components) {
                (Some(k), _) => {
                    let info = nu_sharp(&k.parse::<KnotClass>()?, &catalog);
                    vec![info; w.power(power).closure_components().count]
                }
                (None, Some(p)) => component_infos(read_json(p)?, &catalog)?,
                (None, None) => return Err(Error::Parse("give --component-knot or --components".into())),
            };
            let r = branched_cover_pipeline(&w, power, framing, &comps)?;
            let positive = r.verdict;
            Ok(Outcome::new(
                "pipeline branched-cover",
                json!({
                    "braid": braid.braid,
                    "strands": braid.strands,
                    "power": power,
                    "framing": framing,
                    "component_knot": component_knot,
                    "components": components,
                }),
                to_json(&r),
                positive,
            )
            .provenance(format!("diagonal from the row-sum rule with base framing {framing}"))
            .provenance(catalog_note)
            .warning("unknot test is necessary, not sufficient"))
        }
    }
}

fn emit(v: &impl Serialize, pretty: bool) {
    let s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    println!("{}", s.expect("serializable"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit(&json!({ "error": { "kind": "usage", "message": e.to_string() } }), false);
            return ExitCode::from(2);
        }
    };
    let pretty = cli.pretty;
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            emit(&json!({ "error": { "kind": "threads", "message": e.to_string() } }), pretty);
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            emit(&out.report, pretty);
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit(&json!({ "error": { "kind": "input", "message": e.to_string() } }), pretty);
            ExitCode::from(2)
        }
    }
}
