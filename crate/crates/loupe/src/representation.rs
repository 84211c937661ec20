//! Right regular representations, Albert's conditions and cycle classes.

use std::collections::BTreeMap;

use crate::ln_family::{self, build_ln, CycleCounts, LnParams};
use crate::smarandache::is_s_subloop;
use crate::substructures::all_subloops;
use crate::{Caps, Element, Error, FiniteLoop, Result, SubLoop, Verdict};

/// A bijection of `0..len`, stored as images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<Element>,
}

/// Cycle lengths with multiplicities, fixed points counted as length 1.
pub type CycleClass = CycleCounts;

impl Permutation {
    pub fn new(image: Vec<Element>) -> Option<Self> {
        let mut hit = vec![false; image.len()];
        for &y in &image {
            if y >= image.len() || std::mem::replace(&mut hit[y], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn images(&self) -> &[Element] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { image: self.image.iter().map(|&x| other.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<Element>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.image[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn cycle_class(&self) -> CycleClass {
        let mut counts = CycleClass::new();
        let moved: usize = self.cycles().iter().map(|c| c.len()).sum();
        if moved < self.len() {
            counts.insert(1, self.len() - moved);
        }
        for c in self.cycles() {
            *counts.entry(c.len()).or_insert(0) += 1;
        }
        counts
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().map(|c| c.len()).fold(1, lcm)
    }

    /// Cycle notation such as `(e 1)(2 5 3)`; the identity renders as `()`.
    pub fn render(&self, label: impl Fn(Element) -> String) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles.iter().map(|c| format!("({})", c.iter().map(|&x| label(x)).collect::<Vec<_>>().join(" "))).collect()
    }

    pub fn contains_transposition(&self, a: Element, b: Element) -> bool {
        self.image[a] == b && self.image[b] == a && a != b
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / ln_family::gcd(a as u64, b as u64) as usize * b
}

/// Right translation `R_a : x ↦ x·a`.
pub fn right_translation(l: &FiniteLoop, a: Element) -> Permutation {
    Permutation { image: l.elements().map(|x| l.mul(x, a)).collect() }
}

/// Left translation `L_a : x ↦ a·x`.
pub fn left_translation(l: &FiniteLoop, a: Element) -> Permutation {
    Permutation { image: l.elements().map(|x| l.mul(a, x)).collect() }
}

/// `[R_a for a in element order]`.
pub fn right_regular_representation(l: &FiniteLoop) -> Vec<Permutation> {
    l.elements().map(|a| right_translation(l, a)).collect()
}

/// Albert's conditions on a set of permutations of one set: the identity
/// is present, the set is transitive, and no two distinct members agree
/// on any point.
///
/// Failure witnesses are `[1]` for a missing identity, `[2, x, y]` when no
/// member sends `x` to `y`, and `[3, i, j, x]` when members `i` and `j`
/// agree at `x`.
pub fn validate_albert(perms: &[Permutation]) -> Verdict {
    let Some(n) = perms.first().map(|p| p.len()) else {
        return Verdict::fail(vec![1]);
    };
    if !perms.iter().any(|p| p.is_identity()) {
        return Verdict::fail(vec![1]);
    }
    for x in 0..n {
        let mut reached = vec![false; n];
        for p in perms {
            reached[p.apply(x)] = true;
        }
        if let Some(y) = reached.iter().position(|r| !r) {
            return Verdict::fail(vec![2, x, y]);
        }
    }
    for x in 0..n {
        let mut owner = vec![usize::MAX; n];
        for (i, p) in perms.iter().enumerate() {
            let y = p.apply(x);
            if owner[y] != usize::MAX {
                let j = owner[y];
                if perms[j] != perms[i] {
                    return Verdict::fail(vec![3, j, i, x]);
                }
            }
            owner[y] = i;
        }
    }
    Verdict::pass()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    /// All non-identity `R_a` share one cycle class.
    pub uniform_class: bool,
    /// Cycle class of `R_1`.
    pub class: CycleClass,
    /// The predicted class, or the reason the prediction rule breaks.
    pub prediction: std::result::Result<CycleClass, Error>,
    pub matches_prediction: bool,
    /// Every non-identity `R_a` contains the transposition `(a e)`.
    pub transposition_present: bool,
}

pub fn representation_report(p: LnParams) -> RepresentationReport {
    let l = build_ln(p);
    let reps = right_regular_representation(&l);
    let class = reps[1].cycle_class();
    let uniform_class = reps[1..].iter().all(|r| r.cycle_class() == class);
    let transposition_present = (1..l.order()).all(|a| reps[a].contains_transposition(a, 0));
    let prediction = ln_family::predicted_cycle_class(p);
    let matches_prediction = prediction.as_ref().is_ok_and(|c| *c == class);
    RepresentationReport { uniform_class, class, prediction, matches_prediction, transposition_present }
}

/// `{R_a : a ∈ A}` acting on all of `L`, for a Smarandache subloop `A`.
pub fn s_representation(l: &FiniteLoop, a: &SubLoop) -> Result<Vec<Permutation>> {
    a.check_parent(l)?;
    if !is_s_subloop(l, a) {
        return Err(Error::NotAnSSubloop);
    }
    Ok(a.elements().iter().map(|&x| right_translation(l, x)).collect())
}

/// For a loop with subgroups but no Smarandache subloops: each proper
/// subgroup of order at least 2 with its translations `{R_b : b ∈ B}`.
pub fn s_pseudo_representation(l: &FiniteLoop, caps: &Caps) -> Result<BTreeMap<SubLoop, Vec<Permutation>>> {
    let census = all_subloops(l, caps)?;
    if census.subloops.iter().any(|s| is_s_subloop(l, s)) {
        return Err(Error::HasSSubloops);
    }
    Ok(census
        .subgroups()
        .filter(|s| s.is_proper() && s.order() >= 2)
        .map(|s| (s.clone(), s.elements().iter().map(|&x| right_translation(l, x)).collect()))
        .collect())
}
