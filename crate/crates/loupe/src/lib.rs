//! Computational algebra for finite loops.
//!
//! A loop is stored as a Cayley table with its identity at index 0. Every
//! other module works on that carrier: the `L_n(m)` family, identity checks,
//! subloop census, inclusion lattices, Smarandache criteria, right regular
//! representations, the edge-coloring correspondence and principal isotopes.

pub mod coloring;
mod error;
pub mod identities;
pub mod isotopes;
pub mod lattice;
pub mod ln_family;
pub mod loop_core;
pub mod representation;
pub mod smarandache;
pub mod substructures;

pub use error::Error;
pub use loop_core::{Element, FiniteLoop, IsoWitness, SubLoop};

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a decision procedure.
///
/// `witness` holds the elements that falsify a universal property, or the
/// elements that satisfy an existential one, in the order documented by the
/// producing function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn pass_with(witness: Vec<Element>) -> Self {
        Verdict { holds: true, witness: Some(witness) }
    }

    pub fn fail(witness: Vec<Element>) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }

    pub fn fail_bare() -> Self {
        Verdict { holds: false, witness: None }
    }

    pub fn from_counterexample(cx: Option<Vec<Element>>) -> Self {
        match cx {
            Some(w) => Verdict::fail(w),
            None => Verdict::pass(),
        }
    }

    pub fn from_example(ex: Option<Vec<Element>>) -> Self {
        match ex {
            Some(w) => Verdict::pass_with(w),
            None => Verdict::fail_bare(),
        }
    }
}

/// Size limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of permutations in a multiplication-group closure.
    pub mlt: usize,
    /// Maximum subset size for the unique-product searches.
    pub up_subset: usize,
    /// Maximum number of subloops in a census.
    pub census: usize,
    /// Largest parent order a census is attempted on.
    pub census_order: usize,
    /// Maximum number of coset-cover solutions.
    pub coset_solutions: usize,
    /// Maximum number of principal isotopes examined by G-loop checks.
    pub isotopes: usize,
    /// Maximum number of search nodes in coloring enumeration.
    pub coloring_nodes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            mlt: 50_000,
            up_subset: 3,
            census: 5_000,
            census_order: 60,
            coset_solutions: 1_000,
            isotopes: 10_000,
            coloring_nodes: 50_000_000,
        }
    }
}
