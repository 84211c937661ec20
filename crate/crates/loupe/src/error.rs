use thiserror::Error;

use crate::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{size}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },
    #[error("row {0} is not a permutation")]
    LatinRowViolation(usize),
    #[error("column {0} is not a permutation")]
    LatinColumnViolation(usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("order {0} exceeds the supported maximum of 65536")]
    TooLarge(usize),
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("set is not closed: {x}*{y} = {product} lies outside")]
    NotClosed { x: Element, y: Element, product: Element },
    #[error("subloop does not belong to a loop of order {0}")]
    ForeignSubloop(usize),
    #[error("not a normal subloop: condition {condition} fails at x={x}, y={y}")]
    NotNormal { condition: u8, x: Element, y: Element },
    #[error("coset product is not well defined")]
    IllDefinedCosetProduct,
    #[error("{what} exceeds the size cap of {limit}")]
    SizeCapExceeded { what: &'static str, limit: usize },
    #[error("{what} reached the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("n must be odd > 3 (got {0})")]
    InvalidN(u64),
    #[error("invalid parameters n={n}, m={m}: {reason}")]
    InvalidParams { n: u64, m: u64, reason: &'static str },
    #[error("{t} does not divide {n}")]
    NotADivisor { t: u64, n: u64 },
    #[error("index {i} is not in 1..={t}")]
    BadIndex { i: u64, t: u64 },
    #[error("cycle rule breaks for n={n}, m={m}: {remainder} elements left for cycles of length {length}")]
    CycleRuleBreaks { n: u64, m: u64, length: usize, remainder: usize },
    #[error("not an IP loop: witness {0:?}")]
    NotIPLoop(Vec<Element>),
    #[error("{p} is not a prime dividing the order {order}")]
    NotPrime { p: usize, order: usize },
    #[error("set is not a subgroup")]
    NotASubgroup,
    #[error("set is not a Smarandache subloop")]
    NotAnSSubloop,
    #[error("loop has Smarandache subloops")]
    HasSSubloops,
    #[error("q={0} is not in the supplied subloop")]
    QNotInSubloop(Element),
    #[error("element {0} does not square to the identity")]
    NotInvolutory(Element),
    #[error("right alternative law fails at ({x}, {y})")]
    NotRightAlternative { x: Element, y: Element },
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("improper coloring: vertex {vertex} has two edges of color {color}")]
    ImproperColoring { vertex: usize, color: usize },
    #[error("coloring is not total or uses colors outside 1..={max}")]
    IncompleteColoring { max: usize },
    #[error("color labels must be a bijection onto the non-identity elements")]
    BadColorLabels,
}
