use loupe::representation::CycleClass;
use loupe::{Element, FiniteLoop, SubLoop, Verdict};
use serde_json::{json, Value};

/// Text and JSON renderings of one command's result.
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

pub fn labels(l: &FiniteLoop, xs: &[Element]) -> Vec<String> {
    xs.iter().map(|&x| l.label(x)).collect()
}

pub fn set(l: &FiniteLoop, xs: &[Element]) -> String {
    format!("{{{}}}", labels(l, xs).join(","))
}

pub fn sub(l: &FiniteLoop, s: &SubLoop) -> String {
    set(l, s.elements())
}

pub fn verdict(l: &FiniteLoop, v: &Verdict) -> String {
    let head = if v.holds { "PASS" } else { "FAIL" };
    match &v.witness {
        Some(w) if !w.is_empty() => format!("{head} (witness: {})", labels(l, w).join(" ")),
        _ => head.to_string(),
    }
}

pub fn verdict_json(l: &FiniteLoop, v: &Verdict) -> Value {
    json!({ "holds": v.holds, "witness": v.witness.as_ref().map(|w| labels(l, w)) })
}

pub fn cycle_class(c: &CycleClass) -> String {
    let parts: Vec<String> = c.iter().map(|(len, count)| format!("{len}:{count}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Cayley table with a `*` header row and labelled rows.
pub fn table(l: &FiniteLoop) -> String {
    let width = l.elements().map(|x| l.label(x).len()).max().unwrap_or(1).max(1);
    let cell = |s: String| format!("{s:>width$}");
    let mut out = String::new();
    let header: Vec<String> = std::iter::once(cell("*".into())).chain(l.elements().map(|x| cell(l.label(x)))).collect();
    out.push_str(&header.join(" "));
    out.push('\n');
    for x in l.elements() {
        let row: Vec<String> =
            std::iter::once(cell(l.label(x))).chain(l.elements().map(|y| cell(l.label(l.mul(x, y))))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
