use serde::{Deserialize, Serialize};

use super::braid::{BraidWord, ClosureComponents, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Parallel twisting of two downward strands, a power of one braid generator.
    Vertical,
    /// Antiparallel twisting: the strands run sideways through the box. Only
    /// odd twists keep a braid-like top-to-bottom routing.
    Horizontal,
}

/// A twist box acting on strand positions `position` and `position + 1`
/// (1-based) at its height in the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    pub position: usize,
    pub twist: i64,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistTangle {
    pub strands: usize,
    /// Boxes from top to bottom.
    pub regions: Vec<Region>,
}

impl TwistTangle {
    pub fn from_braid(w: &BraidWord) -> Self {
        let regions = w
            .letters()
            .iter()
            .map(|&l| Region {
                position: l.unsigned_abs() as usize,
                twist: l.signum(),
                orientation: Orientation::Vertical,
            })
            .collect();
        TwistTangle { strands: w.strands(), regions }
    }
}

/// A single crossing, tagged with the box it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub region: usize,
    /// Which stacked copy of the tangle (0 unless the diagram was powered).
    pub copy: usize,
    /// 1-based index inside the box, counted along the left-entering strand.
    pub index: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Slice {
    /// 0-based left position.
    position: usize,
    first: usize,
    len: usize,
    positive: bool,
}

/// A passage of one strand through one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

/// A tangle diagram cut into horizontal slices, each swapping two adjacent
/// positions. The closure joins bottom position `p` to top position `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    strands: usize,
    crossings: Vec<Crossing>,
    slices: Vec<Slice>,
}

/// Compiles a twist tangle into a crossing sequence. Vertical boxes become
/// `|twist|` generator slices; horizontal boxes become one slice holding all
/// their crossings.
pub fn compile_tangle(t: &TwistTangle) -> Result<Diagram> {
    if t.strands == 0 {
        return Err(Error::IllFormedTangle("no strands".into()));
    }
    let mut d = Diagram { strands: t.strands, crossings: Vec::new(), slices: Vec::new() };
    for (r, reg) in t.regions.iter().enumerate() {
        if reg.position == 0 || reg.position >= t.strands {
            return Err(Error::IllFormedTangle(format!(
                "region {r} sits at position {} but there are {} strands",
                reg.position, t.strands
            )));
        }
        let positive = reg.twist > 0;
        let sign = if positive { 1 } else { -1 };
        let n = reg.twist.unsigned_abs() as usize;
        match reg.orientation {
            Orientation::Vertical => {
                for k in 0..n {
                    d.slices.push(Slice { position: reg.position - 1, first: d.crossings.len(), len: 1, positive });
                    d.crossings.push(Crossing { region: r, copy: 0, index: k + 1, sign });
                }
            }
            Orientation::Horizontal => {
                if n.is_multiple_of(2) {
                    return Err(Error::IllFormedTangle(format!(
                        "horizontal region {r} has even twist {}; its endpoints do not route top to bottom",
                        reg.twist
                    )));
                }
                d.slices.push(Slice { position: reg.position - 1, first: d.crossings.len(), len: n, positive });
                for k in 0..n {
                    d.crossings.push(Crossing { region: r, copy: 0, index: k + 1, sign });
                }
            }
        }
    }
    Ok(d)
}

impl Diagram {
    pub fn from_braid(w: &BraidWord) -> Self {
        compile_tangle(&TwistTangle::from_braid(w)).expect("braid words compile")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Stacks `d` copies, the first on top.
    pub fn power(&self, d: usize) -> Diagram {
        let mut out = Diagram { strands: self.strands, crossings: Vec::new(), slices: Vec::new() };
        for copy in 0..d {
            let offset = out.crossings.len();
            out.crossings.extend(self.crossings.iter().map(|c| Crossing { copy, ..*c }));
            out.slices.extend(self.slices.iter().map(|s| Slice { first: s.first + offset, ..s.clone() }));
        }
        out
    }

    /// Endpoint connectivity: top position `p` ends at bottom position `perm[p]`.
    pub fn permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for s in &self.slices {
            for p in at.iter_mut() {
                if *p == s.position {
                    *p += 1;
                } else if *p == s.position + 1 {
                    *p -= 1;
                }
            }
        }
        Permutation(at)
    }

    pub fn closure_components(&self) -> ClosureComponents {
        ClosureComponents::from_permutation(&self.permutation())
    }

    /// Number of crossings in each region of the undivided tangle.
    pub fn region_crossing_counts(&self) -> Vec<usize> {
        let n = self.crossings.iter().map(|c| c.region + 1).max().unwrap_or(0);
        let mut counts = vec![0; n];
        for c in self.crossings.iter().filter(|c| c.copy == 0) {
            counts[c.region] += 1;
        }
        counts
    }

    /// Follows every component of the closure once, starting at the top of
    /// its least strand position, and records each crossing passage.
    ///
    /// Inside a box the left-entering strand meets crossings `1..=n` and the
    /// right-entering strand meets them in reverse. For a positive box the
    /// left-entering strand passes under at odd indices; negative boxes are
    /// mirrored.
    pub fn traverse(&self) -> (ClosureComponents, Vec<Vec<Visit>>) {
        let comps = self.closure_components();
        let mut walks = Vec::with_capacity(comps.count);
        for start in comps.representatives() {
            let mut walk = Vec::new();
            let mut pos = start;
            loop {
                for s in &self.slices {
                    if pos != s.position && pos != s.position + 1 {
                        continue;
                    }
                    let left = pos == s.position;
                    for k in 0..s.len {
                        let idx = if left { k + 1 } else { s.len - k };
                        let left_under = (idx % 2 == 1) == s.positive;
                        walk.push(Visit { crossing: s.first + idx - 1, over: left != left_under });
                    }
                    pos = if left { pos + 1 } else { pos - 1 };
                }
                if pos == start {
                    break;
                }
            }
            walks.push(walk);
        }
        (comps, walks)
    }

    /// The two (1-based) component ids meeting at each crossing.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let (_, walks) = self.traverse();
        let mut seen: Vec<Vec<usize>> = vec![Vec::with_capacity(2); self.crossings.len()];
        for (c, walk) in walks.iter().enumerate() {
            for v in walk {
                seen[v.crossing].push(c + 1);
            }
        }
        seen.into_iter().map(|v| (v[0], v[1])).collect()
    }
}
