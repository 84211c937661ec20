//! Reference tables and independent brute-force oracles shared by the
//! integration tests. Nothing here calls into the library's search code.

#![allow(dead_code)]

use loupe::ln_family::{build_ln, LnParams};
use loupe::loop_core::{cyclic_group, direct_product, symmetric_group, validate_loop};
use loupe::FiniteLoop;

/// Parses a whitespace table whose first line is `* l0 l1 ...` and whose
/// following lines are `label v0 v1 ...`. Entries are header labels.
pub fn parse_table(text: &str) -> FiniteLoop {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header: Vec<&str> = lines.next().unwrap().split_whitespace().skip(1).collect();
    let idx = |s: &str| header.iter().position(|h| *h == s).unwrap_or_else(|| panic!("unknown label {s}"));
    let rows: Vec<Vec<usize>> = lines
        .map(|l| {
            let toks: Vec<&str> = l.split_whitespace().collect();
            toks[1..].iter().map(|t| idx(t)).collect()
        })
        .collect();
    validate_loop(&rows, Some(header.iter().map(|s| s.to_string()).collect())).unwrap()
}

/// Table as label strings, row by row in label order of `order`.
pub fn label_table(l: &FiniteLoop, order: &[&str]) -> Vec<Vec<String>> {
    let el = |s: &str| l.element_by_label(s).unwrap();
    order.iter().map(|&x| order.iter().map(|&y| l.label(l.mul(el(x), el(y)))).collect()).collect()
}

pub fn parsed_label_table(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header: Vec<String> = lines.next().unwrap().split_whitespace().skip(1).map(String::from).collect();
    let rows = lines.map(|l| l.split_whitespace().skip(1).map(String::from).collect()).collect();
    (header, rows)
}

pub const L5_2: &str = "
* e 1 2 3 4 5
e e 1 2 3 4 5
1 1 e 3 5 2 4
2 2 5 e 4 1 3
3 3 4 1 e 5 2
4 4 3 5 2 e 1
5 5 2 4 1 3 e";

pub const L5_3: &str = "
* e 1 2 3 4 5
e e 1 2 3 4 5
1 1 e 4 2 5 3
2 2 4 e 5 3 1
3 3 2 5 e 1 4
4 4 5 3 1 e 2
5 5 3 1 4 2 e";

pub const L7_4: &str = "
* e 1 2 3 4 5 6 7
e e 1 2 3 4 5 6 7
1 1 e 5 2 6 3 7 4
2 2 5 e 6 3 7 4 1
3 3 2 6 e 7 4 1 5
4 4 6 3 7 e 1 5 2
5 5 3 7 4 1 e 2 6
6 6 7 4 1 5 2 e 3
7 7 4 1 5 2 6 3 e";

/// The `(4, e)` principal isotope of `L_5(3)`, rows and columns in the
/// original labels; its identity is the element labelled 4.
pub const L5_3_ISOTOPE: &str = "
* e 1 2 3 4 5
e 4 5 3 1 e 2
1 3 2 5 e 1 4
2 5 3 1 4 2 e
3 2 4 e 5 3 1
4 e 1 2 3 4 5
5 1 e 4 2 5 3";

pub const FIVE: &str = "
* e a b c d
e e a b c d
a a e c d b
b b d a e c
c c b d a e
d d c e b a";

pub const EIGHT: &str = "
* e a1 a2 a3 a4 a5 a6 a7
e e a1 a2 a3 a4 a5 a6 a7
a1 a1 e a4 a7 a3 a6 a2 a5
a2 a2 a6 e a5 a1 a4 a7 a3
a3 a3 a4 a7 e a6 a2 a5 a1
a4 a4 a2 a5 a1 e a7 a3 a6
a5 a5 a7 a3 a6 a2 e a1 a4
a6 a6 a5 a1 a4 a7 a3 e a2
a7 a7 a3 a6 a2 a5 a1 a4 e";

pub const COMMUTATIVE_SIX: &str = "
* e a b c d g
e e a b c d g
a a e d b g c
b b d e g c a
c c b g e a d
d d g c a e b
g g c a d b e";

/// Order-12 C-loop; the cells at row 3 column 8 and row 5 column 11 hold 9
/// and 6 so that every row and column is a permutation.
pub const C_LOOP: &str = "
* 0 1 2 3 4 5 6 7 8 9 10 11
0 0 1 2 3 4 5 6 7 8 9 10 11
1 1 2 0 4 5 3 7 8 6 10 11 9
2 2 0 1 5 3 4 8 6 7 11 9 10
3 3 4 5 0 1 2 10 11 9 8 6 7
4 4 5 3 1 2 0 11 9 10 6 7 8
5 5 3 4 2 0 1 9 10 11 7 8 6
6 6 7 8 11 9 10 0 1 2 4 5 3
7 7 8 6 9 10 11 1 2 0 5 3 4
8 8 6 7 10 11 9 2 0 1 3 4 5
9 9 10 11 7 8 6 5 3 4 0 1 2
10 10 11 9 8 6 7 3 4 5 1 2 0
11 11 9 10 6 7 8 4 5 3 2 0 1";

/// The six right-regular representations of involutory right-alternative loops of order 6.
pub const SIX_BLOCKS: [&str; 6] = [
    "I\n(e 1) (2 3) (4 5)\n(e 2) (1 5) (3 4)\n(e 3) (1 4) (2 5)\n(e 4) (1 2) (3 5)\n(e 5) (1 3) (2 4)\n",
    "I\n(e 1) (2 3) (4 5)\n(e 2) (1 4) (3 5)\n(e 3) (1 5) (2 4)\n(e 4) (1 3) (2 5)\n(e 5) (1 2) (3 4)\n",
    "I\n(e 1) (2 5) (3 4)\n(e 2) (1 3) (4 5)\n(e 3) (1 5) (2 4)\n(e 4) (1 2) (3 5)\n(e 5) (1 4) (2 3)\n",
    "I\n(e 1) (2 4) (3 5)\n(e 2) (1 5) (3 4)\n(e 3) (1 2) (4 5)\n(e 4) (1 3) (2 5)\n(e 5) (1 4) (2 3)\n",
    "I\n(e 1) (2 4) (3 5)\n(e 2) (1 3) (4 5)\n(e 3) (1 4) (2 5)\n(e 4) (1 5) (2 3)\n(e 5) (1 2) (3 4)\n",
    "I\n(e 1) (2 5) (3 4)\n(e 2) (1 4) (3 5)\n(e 3) (1 2) (4 5)\n(e 4) (1 5) (2 3)\n(e 5) (1 3) (2 4)\n",
];

pub const L7_4_REPRESENTATION: &str = "I
(e 1) (2 5 3) (4 6 7)
(e 2) (1 5 7) (3 6 4)
(e 3) (1 2 6) (4 7 5)
(e 4) (1 6 5) (2 3 7)
(e 5) (1 3 4) (2 7 6)
(e 6) (1 7 3) (2 4 5)
(e 7) (1 4 2) (3 5 6)
";

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Admissible multipliers for `L_n`, straight from the coprimality conditions.
pub fn ln_multipliers(n: u64) -> Vec<u64> {
    (2..n).filter(|&m| gcd(m, n) == 1 && gcd(m - 1, n) == 1).collect()
}

/// `i·j` in `L_n(m)` with 0 standing for `e`, computed from the defining rule.
pub fn ln_product(n: u64, m: u64, i: u64, j: u64) -> u64 {
    if i == 0 {
        return j;
    }
    if j == 0 {
        return i;
    }
    if i == j {
        return 0;
    }
    let r = (m * j + n * m - (m - 1) * i % n) % n;
    if r == 0 {
        n
    } else {
        r
    }
}

pub fn ln(n: u64, m: u64) -> FiniteLoop {
    build_ln(LnParams::new(n, m).unwrap())
}

/// Every `L_n(m)` with `n` odd in `5..=max_n`.
pub fn ln_family(max_n: u64) -> Vec<(u64, u64, FiniteLoop)> {
    (5..=max_n).step_by(2).flat_map(|n| ln_multipliers(n).into_iter().map(move |m| (n, m, ln(n, m)))).collect()
}

/// Loops used by the universal property checks.
pub fn corpus() -> Vec<(String, FiniteLoop)> {
    let mut out: Vec<(String, FiniteLoop)> = vec![
        ("five".into(), parse_table(FIVE)),
        ("eight".into(), parse_table(EIGHT)),
        ("commutative-six".into(), parse_table(COMMUTATIVE_SIX)),
        ("c-loop".into(), parse_table(C_LOOP)),
        ("z1".into(), cyclic_group(1).unwrap()),
        ("z6".into(), cyclic_group(6).unwrap()),
        ("s3".into(), symmetric_group(3).unwrap()),
        ("s4".into(), symmetric_group(4).unwrap()),
        ("l5(2)xz2".into(), direct_product(&ln(5, 2), &cyclic_group(2).unwrap()).unwrap()),
    ];
    for (n, m, l) in ln_family(15) {
        out.push((format!("L_{n}({m})"), l));
    }
    out
}

/// Subsets of the loop closed under multiplication, by exhaustive bitmask
/// search over subsets containing the identity. Orders up to about 20.
pub fn brute_subloops(l: &FiniteLoop) -> Vec<Vec<usize>> {
    let n = l.order();
    assert!(n <= 22);
    let mut out = Vec::new();
    for rest in 0u32..(1 << (n - 1)) {
        let mask = (rest << 1) | 1;
        let has = |x: usize| mask >> x & 1 == 1;
        let members: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        if members.iter().all(|&x| members.iter().all(|&y| has(l.mul(x, y)))) {
            out.push(members);
        }
    }
    out
}

/// Number of one-factorizations of `K_{2k}`: repeatedly take the smallest
/// uncovered edge and try every perfect matching through it built from
/// uncovered edges.
pub fn count_one_factorizations(vertices: usize) -> u64 {
    let mut used = vec![vec![false; vertices]; vertices];
    count_factorizations(vertices, &mut used)
}

fn count_factorizations(n: usize, used: &mut Vec<Vec<bool>>) -> u64 {
    let first = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !used[u][v]);
    let Some((u, v)) = first else { return 1 };
    let mut matching = vec![(u, v)];
    let mut total = 0;
    extend_matching(n, used, &mut matching, &mut total);
    total
}

fn extend_matching(n: usize, used: &mut Vec<Vec<bool>>, matching: &mut Vec<(usize, usize)>, total: &mut u64) {
    let covered = |x: usize, m: &[(usize, usize)]| m.iter().any(|&(a, b)| a == x || b == x);
    match (0..n).find(|&x| !covered(x, matching)) {
        None => {
            for &(a, b) in matching.iter() {
                used[a][b] = true;
            }
            *total += count_factorizations(n, used);
            for &(a, b) in matching.iter() {
                used[a][b] = false;
            }
        }
        Some(x) => {
            for y in x + 1..n {
                if !covered(y, matching) && !used[x][y] {
                    matching.push((x, y));
                    extend_matching(n, used, matching, total);
                    matching.pop();
                }
            }
        }
    }
}
