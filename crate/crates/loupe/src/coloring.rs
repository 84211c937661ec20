//! Involutory right-alternative loops of order `2n` and proper
//! `(2n−1)`-edge-colorings of the complete graph `K_{2n}`.
//!
//! Vertices are loop elements with vertex 0 the identity. The edge `{x, y}`
//! gets color `a` exactly when `x·a = y`, so color `a` always contains the
//! edge `{0, a}` and each color class is the set of transpositions of `R_a`.

use std::collections::BTreeMap;

use crate::representation::{right_translation, Permutation};
use crate::{Element, Error, FiniteLoop, Result, Verdict};

/// A total coloring of the edges of `K_{n_vertices}` with colors `1..n_vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n_vertices: usize,
    color_of: BTreeMap<(usize, usize), usize>,
}

impl EdgeColoring {
    /// Accepts edges in either orientation. Fails unless every edge of the
    /// complete graph is colored exactly once with a color in `1..n_vertices`.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let max = n_vertices.saturating_sub(1);
        let incomplete = Error::IncompleteColoring { max };
        let mut color_of = BTreeMap::new();
        for (u, v, c) in edges {
            if u == v || u >= n_vertices || v >= n_vertices || c == 0 || c > max {
                return Err(incomplete);
            }
            if color_of.insert((u.min(v), u.max(v)), c).is_some() {
                return Err(incomplete);
            }
        }
        if color_of.len() != n_vertices * max / 2 {
            return Err(incomplete);
        }
        Ok(EdgeColoring { n_vertices, color_of })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        self.color_of.get(&(u.min(v), u.max(v))).copied()
    }

    /// Edges `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.color_of.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    /// One `u v color` line per edge.
    pub fn to_text(&self) -> String {
        self.edges().map(|(u, v, c)| format!("{u} {v} {c}\n")).collect()
    }

    /// Parses the `u v color` format; blank lines and `#` comments are skipped.
    /// The vertex count is one more than the largest vertex mentioned.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::IncompleteColoring { max: 0 }))
                .collect::<Result<_>>()?;
            match nums[..] {
                [u, v, c] => edges.push((u, v, c)),
                _ => return Err(Error::IncompleteColoring { max: 0 }),
            }
        }
        let n = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
        EdgeColoring::new(n, edges)
    }
}

/// Checks that no two edges at a vertex share a color. The witness is
/// `[vertex, color]` for the first collision, scanning vertices ascending.
pub fn validate_proper(c: &EdgeColoring) -> Verdict {
    let n = c.n_vertices;
    for v in 0..n {
        let mut seen = vec![false; n.max(1)];
        for u in (0..n).filter(|&u| u != v) {
            let col = c.color(u, v).expect("coloring is total");
            if seen[col] {
                return Verdict::fail(vec![v, col]);
            }
            seen[col] = true;
        }
    }
    Verdict::pass()
}

fn check_admissible(l: &FiniteLoop) -> Result<()> {
    let n = l.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if let Some(x) = l.elements().find(|&x| l.mul(x, x) != 0) {
        return Err(Error::NotInvolutory(x));
    }
    for x in l.elements() {
        for y in l.elements() {
            if l.mul(l.mul(x, y), y) != x {
                return Err(Error::NotRightAlternative { x, y });
            }
        }
    }
    Ok(())
}

pub fn loop_to_coloring(l: &FiniteLoop) -> Result<EdgeColoring> {
    check_admissible(l)?;
    let edges = l.elements().flat_map(|x| (1..l.order()).map(move |a| (x, a))).filter_map(|(x, a)| {
        let y = l.mul(x, a);
        (x < y).then_some((x, y, a))
    });
    EdgeColoring::new(l.order(), edges)
}

/// Rebuilds the loop with `x·a = y` whenever `{x, y}` has the color labelled
/// `a`. `color_labels[c - 1]` is the element for color `c`; `None` uses
/// color `c` ↦ element `c`. Element labels are `e, 1, 2, …`.
pub fn coloring_to_loop(c: &EdgeColoring, color_labels: Option<&[Element]>) -> Result<FiniteLoop> {
    let n = c.n_vertices;
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    let v = validate_proper(c);
    if let Some(w) = v.witness.filter(|_| !v.holds) {
        return Err(Error::ImproperColoring { vertex: w[0], color: w[1] });
    }
    let identity: Vec<Element> = (1..n).collect();
    let labels = color_labels.unwrap_or(&identity);
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted != identity {
        return Err(Error::BadColorLabels);
    }
    let mut table = vec![vec![0; n]; n];
    for (x, row) in table.iter_mut().enumerate() {
        row[0] = x;
    }
    for (u, v, col) in c.edges() {
        let a = labels[col - 1];
        table[u][a] = v;
        table[v][a] = u;
    }
    let names = std::iter::once("e".to_string()).chain((1..n).map(|i| i.to_string())).collect();
    crate::loop_core::validate_loop(&table, Some(names))
}

/// All involutory right-alternative loops on `0..order` with identity 0.
///
/// Colors are filled in ascending order; each color class extends the forced
/// edge `{0, a}` to a perfect matching, choosing the partner of the smallest
/// unmatched vertex in ascending order. The result is in that search order.
pub fn enumerate_involutory_right_alt(order: usize, cap: usize) -> Result<Vec<FiniteLoop>> {
    if order % 2 == 1 {
        return Err(Error::OddOrder(order));
    }
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    let mut search = Search {
        n: order,
        used: vec![vec![false; order]; order],
        partner: vec![vec![0; order]; order],
        nodes: 0,
        cap,
        out: Vec::new(),
    };
    search.color(1)?;
    Ok(search.out)
}

struct Search {
    n: usize,
    used: Vec<Vec<bool>>,
    /// `partner[a][x]` is `x·a`.
    partner: Vec<Vec<usize>>,
    nodes: usize,
    cap: usize,
    out: Vec<FiniteLoop>,
}

impl Search {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::SizeCapExceeded { what: "coloring search nodes", limit: self.cap });
        }
        Ok(())
    }

    fn color(&mut self, a: usize) -> Result<()> {
        if a == self.n {
            let n = self.n;
            let table: Vec<Vec<usize>> =
                (0..n).map(|x| (0..n).map(|b| if b == 0 { x } else { self.partner[b][x] }).collect()).collect();
            let names = std::iter::once("e".to_string()).chain((1..n).map(|i| i.to_string())).collect();
            self.out.push(crate::loop_core::validate_loop(&table, Some(names))?);
            return Ok(());
        }
        if self.used[0][a] {
            return Ok(());
        }
        let mut matched = vec![false; self.n];
        self.pair(a, 0, a, &mut matched)?;
        Ok(())
    }

    fn pair(&mut self, a: usize, x: usize, y: usize, matched: &mut [bool]) -> Result<()> {
        self.tick()?;
        self.used[x][y] = true;
        self.used[y][x] = true;
        matched[x] = true;
        matched[y] = true;
        self.partner[a][x] = y;
        self.partner[a][y] = x;
        match matched.iter().position(|m| !m) {
            None => self.color(a + 1)?,
            Some(u) => {
                for v in u + 1..self.n {
                    if !matched[v] && !self.used[u][v] {
                        self.pair(a, u, v, matched)?;
                    }
                }
            }
        }
        self.used[x][y] = false;
        self.used[y][x] = false;
        matched[x] = false;
        matched[y] = false;
        Ok(())
    }
}

/// Block of right translations in cycle notation: `I` followed by one line
/// per non-identity element, cycles separated by spaces.
pub fn representation_block(l: &FiniteLoop) -> String {
    let mut s = String::from("I\n");
    for a in 1..l.order() {
        let p: Permutation = right_translation(l, a);
        let line: Vec<String> = p
            .cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|&x| l.label(x)).collect::<Vec<_>>().join(" ")))
            .collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}
