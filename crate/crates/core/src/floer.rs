//! Catalog-driven ν♯ and shape data, and the decision predicates built on
//! them: triviality of n-trace cobordism maps, the hypotheses of the
//! negative-definite surgery theorem, and their positive-definite mirror.
//!
//! No Floer homology is computed here; ν♯ values come only from the torus
//! knot rule, the mirror rule, or a JSON catalog.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrices::IntMatrix;

/// Environment variable naming an extra catalog file merged over the built-in one.
pub const CATALOG_ENV: &str = "COVERS_NU_CATALOG";

const BUILTIN_CATALOG: &str = include_str!("../data/nu_catalog.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    V,
    W,
    #[serde(rename = "unknown")]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KnotClass {
    Unknot,
    /// The torus knot `T(2, q)`, `q` odd and at least 3.
    Torus2 {
        q: i64,
    },
    CatalogEntry {
        name: String,
    },
    Mirror {
        of: Box<KnotClass>,
    },
    Unknown {
        name: String,
    },
}

impl KnotClass {
    pub fn mirror(self) -> KnotClass {
        match self {
            KnotClass::Mirror { of } => *of,
            k => KnotClass::Mirror { of: Box::new(k) },
        }
    }

    /// Collapses nested mirrors.
    pub fn normalize(self) -> KnotClass {
        match self {
            KnotClass::Mirror { of } => match of.normalize() {
                KnotClass::Mirror { of } => *of,
                k => KnotClass::Mirror { of: Box::new(k) },
            },
            k => k,
        }
    }

    /// `T(2, q)` for any odd `q`: the unknot for `q = ±1`, a mirror for `q < 0`.
    pub fn torus2_signed(q: i64) -> KnotClass {
        match q {
            1 | -1 => KnotClass::Unknot,
            q if q < 0 => KnotClass::Torus2 { q: -q }.mirror(),
            q => KnotClass::Torus2 { q },
        }
    }
}

/// Accepts `unknot`, `T(2,q)`, `mirror(<knot>)`, `unknown` or
/// `unknown(<name>)`; anything else names a catalog entry.
impl FromStr for KnotClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty knot description".into()));
        }
        if s.eq_ignore_ascii_case("unknot") {
            return Ok(KnotClass::Unknot);
        }
        if s.eq_ignore_ascii_case("unknown") {
            return Ok(KnotClass::Unknown { name: String::new() });
        }
        if let Some(inner) = s.strip_prefix("mirror(").and_then(|r| r.strip_suffix(')')) {
            return Ok(inner.parse::<KnotClass>()?.mirror());
        }
        if let Some(inner) = s.strip_prefix("unknown(").and_then(|r| r.strip_suffix(')')) {
            return Ok(KnotClass::Unknown { name: inner.to_string() });
        }
        if let Some(inner) = s.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
            let (two, q) = inner.split_once(',').ok_or_else(|| Error::Parse(format!("torus knot {s:?}")))?;
            let q: i64 = q.trim().parse().map_err(|e| Error::Parse(format!("torus knot {s:?}: {e}")))?;
            if two.trim() != "2" || q % 2 == 0 {
                return Err(Error::Parse(format!("only T(2,q) with q odd is supported, got {s:?}")));
            }
            return Ok(KnotClass::torus2_signed(q));
        }
        Ok(KnotClass::CatalogEntry { name: s.to_string() })
    }
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotClass::Unknot => write!(f, "unknot"),
            KnotClass::Torus2 { q } => write!(f, "T(2,{q})"),
            KnotClass::CatalogEntry { name } => write!(f, "{name}"),
            KnotClass::Mirror { of } => write!(f, "mirror({of})"),
            KnotClass::Unknown { name } => write!(f, "unknown({name})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuSharpInfo {
    pub nu: Option<i64>,
    pub shape: Shape,
    pub provenance: String,
}

impl NuSharpInfo {
    pub fn new(nu: i64, shape: Shape, provenance: impl Into<String>) -> Self {
        NuSharpInfo { nu: Some(nu), shape, provenance: provenance.into() }
    }

    pub fn unknown(provenance: impl Into<String>) -> Self {
        NuSharpInfo { nu: None, shape: Shape::Unknown, provenance: provenance.into() }
    }

    /// `ν♯(K̄) = -ν♯(K)`, shape preserved.
    pub fn mirror(&self) -> Self {
        NuSharpInfo { nu: self.nu.map(|n| -n), shape: self.shape, provenance: format!("mirror({})", self.provenance) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub nu: i64,
    pub shape: Shape,
}

/// Named ν♯/shape records. Built-in entries hold only quoted values; users
/// may extend the catalog from a JSON file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogRecord>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::from_json(BUILTIN_CATALOG).expect("built-in catalog is valid")
    }
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog { entries: BTreeMap::new() }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let entries: BTreeMap<String, CatalogRecord> =
            serde_json::from_str(s).map_err(|e| Error::Catalog(e.to_string()))?;
        for (name, r) in &entries {
            if r.nu != 0 && r.shape != Shape::V {
                return Err(Error::Catalog(format!("{name}: nu = {} requires shape V", r.nu)));
            }
            if r.nu == 0 && r.shape == Shape::Unknown {
                return Err(Error::Catalog(format!("{name}: nu = 0 needs an explicit shape")));
            }
        }
        Ok(Catalog { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    /// Built-in entries, overridden by the file named in [`CATALOG_ENV`] if set.
    pub fn from_env() -> Result<Self> {
        let mut c = Catalog::default();
        if let Some(p) = std::env::var_os(CATALOG_ENV) {
            c.merge(Catalog::load(Path::new(&p))?);
        }
        Ok(c)
    }

    pub fn merge(&mut self, other: Catalog) {
        self.entries.extend(other.entries);
    }

    pub fn get(&self, name: &str) -> Option<&CatalogRecord> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

pub fn nu_sharp(k: &KnotClass, catalog: &Catalog) -> NuSharpInfo {
    match k {
        KnotClass::Unknot => match catalog.get("unknot") {
            Some(r) => NuSharpInfo::new(r.nu, r.shape, "catalog:unknot"),
            None => NuSharpInfo::unknown("unknot missing from catalog"),
        },
        KnotClass::Torus2 { q } if *q >= 3 && q % 2 != 0 => {
            NuSharpInfo::new(q - 2, Shape::V, format!("torus rule: T(2,{q}) has nu = q - 2"))
        }
        KnotClass::Torus2 { q } => NuSharpInfo::unknown(format!("T(2,{q}) outside the torus rule (q odd, q >= 3)")),
        KnotClass::CatalogEntry { name } => match catalog.get(name) {
            Some(r) => NuSharpInfo::new(r.nu, r.shape, format!("catalog:{name}")),
            None => NuSharpInfo::unknown(format!("{name} not in catalog")),
        },
        KnotClass::Mirror { of } => match &**of {
            KnotClass::Mirror { of: inner } => nu_sharp(inner, catalog),
            inner => nu_sharp(inner, catalog).mirror(),
        },
        KnotClass::Unknown { name } => NuSharpInfo::unknown(format!("no data for {name}")),
    }
}

/// Whether the `n`-trace cobordism map of a knot with data `info` vanishes.
pub fn trace_map_trivial(info: &NuSharpInfo, n: i64) -> Result<bool> {
    let nu = info.nu.ok_or(Error::UnknownNu)?;
    if nu != 0 {
        return Ok(n >= nu);
    }
    match info.shape {
        Shape::V => Ok(n >= -1),
        Shape::W => Ok(n >= 1),
        Shape::Unknown => Err(Error::InconclusiveShape),
    }
}

/// Which of the three cases (1-based) a diagonal entry satisfies against
/// `info` on the negative-definite side.
fn thm_case(a: i64, info: &NuSharpInfo) -> std::result::Result<u8, String> {
    match (info.nu, info.shape) {
        (None, _) => Err(format!("nu unknown ({})", info.provenance)),
        (Some(nu), _) if nu != 0 => {
            if a >= nu {
                Ok(1)
            } else {
                Err(format!("a = {a} < nu = {nu}"))
            }
        }
        (Some(_), Shape::V) => {
            if a >= -1 {
                Ok(2)
            } else {
                Err(format!("nu = 0, V-shaped, a = {a} < -1"))
            }
        }
        (Some(_), Shape::W) => {
            if a >= 1 {
                Ok(3)
            } else {
                Err(format!("nu = 0, W-shaped, a = {a} < 1"))
            }
        }
        (Some(_), Shape::Unknown) => Err("nu = 0 with unknown shape".into()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThmNuVerdict {
    pub applies: bool,
    /// 1-based.
    pub witness_index: Option<usize>,
    pub case: Option<u8>,
    pub failures: Vec<String>,
}

/// Checks the hypotheses of the surgery theorem: `A` symmetric, unimodular
/// and negative definite, and some component `i` with data meeting one of
/// the three diagonal conditions.
pub fn thm_nu_applies(a: &IntMatrix, components: &[NuSharpInfo]) -> Result<ThmNuVerdict> {
    if components.len() != a.dim() {
        return Err(Error::ComponentCount { expected: a.dim(), got: components.len() });
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let det = a.det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    if !a.is_negative_definite()? {
        return Err(Error::NotNegativeDefinite);
    }
    let mut failures = Vec::new();
    for (i, info) in components.iter().enumerate() {
        let Some(aii) = a[(i, i)].to_i64() else {
            failures.push(format!("a_{0}{0} does not fit in i64", i + 1));
            continue;
        };
        match thm_case(aii, info) {
            Ok(case) => {
                return Ok(ThmNuVerdict { applies: true, witness_index: Some(i + 1), case: Some(case), failures });
            }
            Err(why) => failures.push(format!("component {}: {why}", i + 1)),
        }
    }
    Ok(ThmNuVerdict { applies: false, witness_index: None, case: None, failures })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum AdaptedCondition {
    Satisfied { case: u8 },
    Violated,
    Inconclusive,
}

impl AdaptedCondition {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, AdaptedCondition::Satisfied { .. })
    }
}

/// Positive-definite mirror of the theorem's diagonal conditions:
/// `a ≤ ν` (ν ≠ 0), `a ≤ ν + 1` (ν = 0, V) or `a ≤ ν - 1` (ν = 0, W).
pub fn adapted_inequalities(a11: i64, info: &NuSharpInfo) -> AdaptedCondition {
    match (info.nu, info.shape) {
        (None, _) => AdaptedCondition::Inconclusive,
        (Some(nu), _) if nu != 0 => {
            if a11 <= nu {
                AdaptedCondition::Satisfied { case: 1 }
            } else {
                AdaptedCondition::Violated
            }
        }
        (Some(nu), Shape::V) => {
            if a11 <= nu + 1 {
                AdaptedCondition::Satisfied { case: 2 }
            } else {
                AdaptedCondition::Violated
            }
        }
        (Some(nu), Shape::W) => {
            if a11 < nu {
                AdaptedCondition::Satisfied { case: 3 }
            } else {
                AdaptedCondition::Violated
            }
        }
        (Some(_), Shape::Unknown) => AdaptedCondition::Inconclusive,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFactorization {
    pub g: i64,
    pub d_prime: i64,
}

/// `g = gcd(w, d)` and `d' = d / g`; fails when `gcd(w, d') != 1`.
pub fn cover_factorization(d: i64, w: i64) -> Result<CoverFactorization> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let g = w.gcd(&d);
    let d_prime = d / g;
    let check = w.gcd(&d_prime);
    if check != 1 {
        return Err(Error::FactorizationNotCoprime { d, w, gcd: check });
    }
    Ok(CoverFactorization { g, d_prime })
}

/// Negation that keeps the per-component data aligned with `-A`.
pub fn mirror_data(a: &IntMatrix, components: &[NuSharpInfo]) -> (IntMatrix, Vec<NuSharpInfo>) {
    (a.negate(), components.iter().map(NuSharpInfo::mirror).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn info(nu: i64, shape: Shape) -> NuSharpInfo {
        NuSharpInfo::new(nu, shape, "test")
    }

    #[test]
    fn nu_rules() {
        let c = Catalog::default();
        assert_eq!(nu_sharp(&KnotClass::Torus2 { q: 5 }, &c).nu, Some(3));
        let m = nu_sharp(&KnotClass::Torus2 { q: 5 }.mirror(), &c);
        assert_eq!((m.nu, m.shape), (Some(-3), Shape::V));
        let clasp = nu_sharp(&KnotClass::CatalogEntry { name: "5_2_negative_clasp".into() }, &c);
        assert_eq!(clasp.nu, Some(-1));
        assert_eq!(nu_sharp(&KnotClass::Unknown { name: "x".into() }, &c).nu, None);
        assert_eq!(nu_sharp(&KnotClass::CatalogEntry { name: "nope".into() }, &c).nu, None);
        let k = KnotClass::Torus2 { q: 7 };
        assert_eq!(k.clone().mirror().mirror(), k);
        let nested = KnotClass::Mirror { of: Box::new(KnotClass::Mirror { of: Box::new(k.clone()) }) };
        assert_eq!(nested.normalize(), k);
    }

    #[test]
    fn trace_cases() {
        assert!(!trace_map_trivial(&info(3, Shape::V), 2).unwrap());
        assert!(trace_map_trivial(&info(3, Shape::V), 3).unwrap());
        assert!(trace_map_trivial(&info(0, Shape::V), -1).unwrap());
        assert!(!trace_map_trivial(&info(0, Shape::V), -2).unwrap());
        assert!(!trace_map_trivial(&info(0, Shape::W), 0).unwrap());
        assert!(trace_map_trivial(&info(0, Shape::W), 1).unwrap());
        assert_eq!(trace_map_trivial(&info(0, Shape::Unknown), 4), Err(Error::InconclusiveShape));
        assert_eq!(trace_map_trivial(&NuSharpInfo::unknown("?"), 4), Err(Error::UnknownNu));
    }

    #[test]
    fn thm_nu_examples() {
        let a = IntMatrix::identity(2).negate();
        let v = thm_nu_applies(&a, &[info(-1, Shape::V), info(-1, Shape::V)]).unwrap();
        assert_eq!((v.applies, v.witness_index, v.case), (true, Some(1), Some(1)));

        let a = IntMatrix::identity(1).negate();
        assert!(thm_nu_applies(&a, &[info(-2, Shape::V)]).unwrap().applies);
        let v = thm_nu_applies(&a, &[NuSharpInfo::unknown("?")]).unwrap();
        assert!(!v.applies && v.failures.len() == 1);
    }

    #[test]
    fn thm_nu_rejections() {
        let pos = IntMatrix::identity(2);
        let comps = [info(1, Shape::V), info(1, Shape::V)];
        assert_eq!(thm_nu_applies(&pos, &comps), Err(Error::NotNegativeDefinite));
        let asym = IntMatrix::from_i64([[-1, 1], [0, -1]]);
        assert_eq!(thm_nu_applies(&asym, &comps), Err(Error::NotSymmetric));
        let m = IntMatrix::from_i64([[-2, 0], [0, -1]]);
        assert!(matches!(thm_nu_applies(&m, &comps), Err(Error::NotUnimodular(_))));
        assert!(matches!(thm_nu_applies(&pos, &comps[..1]), Err(Error::ComponentCount { .. })));
    }

    #[test]
    fn adapted_cases() {
        assert_eq!(adapted_inequalities(3, &info(3, Shape::V)), AdaptedCondition::Satisfied { case: 1 });
        assert_eq!(adapted_inequalities(1, &info(0, Shape::V)), AdaptedCondition::Satisfied { case: 2 });
        assert_eq!(adapted_inequalities(0, &info(0, Shape::W)), AdaptedCondition::Violated);
        assert_eq!(adapted_inequalities(0, &NuSharpInfo::unknown("?")), AdaptedCondition::Inconclusive);
    }

    #[test]
    fn factorization() {
        assert_eq!(cover_factorization(6, 4).unwrap(), CoverFactorization { g: 2, d_prime: 3 });
        assert_eq!(cover_factorization(5, 2).unwrap(), CoverFactorization { g: 1, d_prime: 5 });
        assert_eq!(cover_factorization(9, 6), Err(Error::FactorizationNotCoprime { d: 9, w: 6, gcd: 3 }));
        assert_eq!(cover_factorization(0, 1), Err(Error::NonPositiveDegree(0)));
    }

    #[test]
    fn parse_knots() {
        assert_eq!("T(2,5)".parse::<KnotClass>().unwrap(), KnotClass::Torus2 { q: 5 });
        assert_eq!("mirror(T(2,5))".parse::<KnotClass>().unwrap(), KnotClass::Torus2 { q: 5 }.mirror());
        assert_eq!("T(2,-1)".parse::<KnotClass>().unwrap(), KnotClass::Unknot);
        assert_eq!(
            "5_2_negative_clasp".parse::<KnotClass>().unwrap(),
            KnotClass::CatalogEntry { name: "5_2_negative_clasp".into() }
        );
        assert!("T(3,4)".parse::<KnotClass>().is_err());
        let k = KnotClass::Torus2 { q: 7 }.mirror();
        assert_eq!(k.to_string().parse::<KnotClass>().unwrap(), k);
    }

    #[test]
    fn catalog_validation() {
        assert!(Catalog::from_json(r#"{"k": {"nu": 2, "shape": "W"}}"#).is_err());
        assert!(Catalog::from_json(r#"{"k": {"nu": 0, "shape": "unknown"}}"#).is_err());
        let mut c = Catalog::default();
        c.merge(Catalog::from_json(r#"{"k": {"nu": 0, "shape": "W"}}"#).unwrap());
        assert_eq!(c.names().count(), 3);
    }
}
