use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use loupe::coloring::{
    coloring_to_loop, enumerate_involutory_right_alt, loop_to_coloring, representation_block, validate_proper,
    EdgeColoring,
};
use loupe::identities::{check_law, is_diassociative, is_power_associative, Law};
use loupe::isotopes::{is_g_loop, principal_isotope};
use loupe::lattice::{build_lattice, InclusionLattice};
use loupe::ln_family::{
    all_h_subloops, build_ln, count_ln, enumerate_ln_params, ln_predicted_flags, predicted_normalizers, LnParams,
};
use loupe::representation::{representation_report, right_regular_representation, validate_albert};
use loupe::smarandache::{
    self as sm, a_hyperloop, coset_cover_search, cosets, cosets_partition, hyper_partition_check, left_coset,
    right_coset, s_classical_report, s_p_sylow, HyperKind, Side,
};
use loupe::substructures::{
    all_subloops, centre, derived_subloop, first_normalizer, frattini_subloop, moufang_centre, nucleus,
    second_normalizer, DerivedKind, NucleusPosition,
};
use loupe::{Caps, Error, FiniteLoop, SubLoop, Verdict};
use serde_json::{json, Map, Value};

use crate::input::{element, element_set, LoopDoc};
use crate::render::{self, labels, set, sub, Rendered};
use crate::{CliError, ColorAction, Family, HyperArg, LnAction, SideArg, Source};

type Out = Result<Rendered, CliError>;

fn loop_json(l: &FiniteLoop) -> Value {
    serde_json::to_value(LoopDoc::from_loop(l)).expect("loop documents serialize")
}

pub fn ln(n: u64, m: Option<u64>, action: LnAction, caps: &Caps) -> Out {
    if action == LnAction::List {
        let ms = enumerate_ln_params(n)?;
        let count = count_ln(n)?;
        let list: Vec<String> = ms.iter().map(u64::to_string).collect();
        return Ok(Rendered {
            text: format!("m: {} (count {count})\n", list.join(" ")),
            json: json!({ "n": n, "m": ms, "count": count }),
        });
    }
    let m = m.ok_or_else(|| CliError::usage("this action needs --m"))?;
    let p = LnParams::new(n, m)?;
    let l = build_ln(p);
    match action {
        LnAction::List => unreachable!("handled above"),
        LnAction::Build => Ok(Rendered { text: format!("{p}\n{}", render::table(&l)), json: loop_json(&l) }),
        LnAction::Classify => Ok(classify(p, &l)),
        LnAction::Census => census(p, &l, caps),
        LnAction::Normalizers => Ok(normalizers(p, &l)),
        LnAction::Cycles => Ok(cycles(p, &l)),
    }
}

fn classify(p: LnParams, l: &FiniteLoop) -> Rendered {
    let f = ln_predicted_flags(p);
    let mut text = format!("{p}\n");
    let mut doc = Map::new();
    let predicted = [
        (Law::Commutative, f.commutative),
        (Law::RightAlternative, f.right_alternative),
        (Law::LeftAlternative, f.left_alternative),
        (Law::WIP, f.wip),
    ];
    for (law, expect) in predicted {
        let found = check_law(l, law).holds;
        let agree = if found == expect { "agrees" } else { "DISAGREES" };
        writeln!(text, "{}={found} (predicted {expect}, brute force {agree})", law.name()).unwrap();
        doc.insert(law.name().into(), json!({ "holds": found, "predicted": expect }));
    }
    for law in [Law::Flexible, Law::Moufang1, Law::Bol, Law::Bruck, Law::Associative] {
        let found = check_law(l, law).holds;
        writeln!(text, "{}={found}", law.name()).unwrap();
        doc.insert(law.name().into(), json!({ "holds": found }));
    }
    let extra = [("power-associative", is_power_associative(l).holds), ("diassociative", is_diassociative(l).holds)];
    for (name, found) in extra {
        writeln!(text, "{name}={found}").unwrap();
        doc.insert(name.into(), json!({ "holds": found }));
    }
    Rendered { text, json: json!({ "loop": p.to_string(), "flags": doc }) }
}

fn census(p: LnParams, l: &FiniteLoop, caps: &Caps) -> Out {
    let mut text = format!("{p}\n");
    let mut families = Vec::new();
    for (t, hs) in all_h_subloops(p) {
        let sets: Vec<String> = hs.iter().map(|h| sub(l, h)).collect();
        writeln!(text, "t={t}: {}", sets.join(" ")).unwrap();
        families.push(json!({ "t": t, "subloops": hs.iter().map(|h| labels(l, h.elements())).collect::<Vec<_>>() }));
    }
    let c = all_subloops(l, caps)?;
    let groups = c.subgroups().count();
    let normal: Vec<String> = c.normal_subloops().map(|s| sub(l, s)).collect();
    writeln!(text, "census: {} subloops, {groups} subgroups", c.subloops.len()).unwrap();
    writeln!(text, "normal: {}", normal.join(" ")).unwrap();
    Ok(Rendered {
        text,
        json: json!({
            "loop": p.to_string(),
            "h_subloops": families,
            "subloops": c.subloops.len(),
            "subgroups": groups,
            "normal": normal,
        }),
    })
}

fn normalizers(p: LnParams, l: &FiniteLoop) -> Rendered {
    let mut text = format!("{p}\n");
    let mut rows = Vec::new();
    for (t, hs) in all_h_subloops(p) {
        for (k, h) in hs.iter().enumerate() {
            let i = k as u64 + 1;
            let (n1, n2) = predicted_normalizers(p, i, t).expect("valid H_i(t)");
            let (b1, b2) = (first_normalizer(l, h), second_normalizer(l, h));
            let mark = |ok: bool| if ok { "agrees" } else { "DISAGREES" };
            writeln!(
                text,
                "H_{i}({t}) = {}: N1 = {} ({} with prediction), N2 = {} ({} with prediction)",
                sub(l, h),
                set(l, &b1),
                mark(b1 == n1.elements()),
                set(l, &b2),
                mark(b2 == n2.elements()),
            )
            .unwrap();
            rows.push(json!({
                "i": i, "t": t,
                "subloop": labels(l, h.elements()),
                "first": labels(l, &b1), "first_predicted": labels(l, n1.elements()),
                "second": labels(l, &b2), "second_predicted": labels(l, n2.elements()),
            }));
        }
    }
    Rendered { text, json: json!({ "loop": p.to_string(), "normalizers": rows }) }
}

fn cycles(p: LnParams, l: &FiniteLoop) -> Rendered {
    let r = representation_report(p);
    let prediction = match &r.prediction {
        Ok(c) => render::cycle_class(c),
        Err(e) => format!("none ({e})"),
    };
    let block = representation_block(l);
    let text = format!(
        "{p}\nclass: {}\npredicted: {prediction}\nuniform: {}\nmatches prediction: {}\ntransposition (a e) in every R_a: {}\n{block}",
        render::cycle_class(&r.class),
        r.uniform_class,
        r.matches_prediction,
        r.transposition_present,
    );
    let json = json!({
        "loop": p.to_string(),
        "class": r.class,
        "predicted": r.prediction.as_ref().ok(),
        "uniform": r.uniform_class,
        "matches_prediction": r.matches_prediction,
        "transposition_present": r.transposition_present,
        "representation": block.lines().collect::<Vec<_>>(),
    });
    Rendered { text, json }
}

fn named_check(l: &FiniteLoop, name: &str) -> Option<Verdict> {
    match name {
        "power-associative" => Some(is_power_associative(l)),
        "diassociative" => Some(is_diassociative(l)),
        _ => Law::from_name(name).map(|law| check_law(l, law)),
    }
}

fn check_names() -> Vec<&'static str> {
    Law::ALL.iter().map(Law::name).chain(["power-associative", "diassociative"]).collect()
}

pub fn check(l: &FiniteLoop, law: &str, _caps: &Caps) -> Out {
    let names: Vec<String> = if law.eq_ignore_ascii_case("all") {
        check_names().into_iter().map(String::from).collect()
    } else {
        vec![law.to_ascii_lowercase().replace(['_', ' '], "-")]
    };
    let mut text = String::new();
    let mut doc = Map::new();
    for name in names {
        let v = named_check(l, &name)
            .ok_or_else(|| CliError::usage(format!("unknown law {law:?}; known: all, {}", check_names().join(", "))))?;
        writeln!(text, "{name}: {}", render::verdict(l, &v)).unwrap();
        doc.insert(name, render::verdict_json(l, &v));
    }
    Ok(Rendered { text, json: Value::Object(doc) })
}

fn flag(l: &FiniteLoop, v: &Verdict) -> String {
    match &v.witness {
        Some(w) if !w.is_empty() => format!("{} (witness: {})", v.holds, labels(l, w).join(" ")),
        _ => v.holds.to_string(),
    }
}

fn lattice_summary(lat: &InclusionLattice, l: &FiniteLoop) -> (String, Value) {
    let modular = lat.check_modular();
    let distributive = lat.check_distributive();
    let names = |ix: &[usize]| ix.iter().map(|&i| lat.node_label(l, i)).collect::<Vec<_>>();
    let size = match lat.len() {
        1 => "1 node".to_string(),
        k => format!("{k} nodes"),
    };
    let text = match (&modular.sublattice, &distributive.sublattice) {
        (Some(p), _) => format!("{} nodes, non-modular (pentagon {})", lat.len(), names(p).join(" ")),
        (None, Some(d)) => format!("{} nodes, modular, non-distributive (diamond {})", lat.len(), names(d).join(" ")),
        (None, None) => format!("{size}, distributive"),
    };
    let json = json!({
        "nodes": lat.len(),
        "modular": modular.holds,
        "distributive": distributive.holds,
        "pentagon": modular.sublattice.map(|p| names(&p)),
        "diamond": lat.find_diamond().map(|d| names(&d)),
    });
    (text, json)
}

/// Runs one report section; a failing section is recorded and the rest go on.
fn section(
    text: &mut String,
    doc: &mut Map<String, Value>,
    name: &str,
    body: impl FnOnce() -> Result<(String, Value), Error>,
) {
    match body() {
        Ok((t, j)) => {
            writeln!(text, "{name}:").unwrap();
            text.push_str(&t);
            doc.insert(name.into(), j);
        }
        Err(e) => {
            writeln!(text, "{name}: skipped ({e})").unwrap();
            doc.insert(name.into(), json!({ "skipped": e.to_string() }));
        }
    }
}

pub fn report(l: &FiniteLoop, caps: &Caps) -> Rendered {
    let mut text = format!("order: {}\n", l.order());
    let mut doc = Map::new();
    doc.insert("order".into(), json!(l.order()));
    section(&mut text, &mut doc, "laws", || {
        let mut t = String::new();
        let mut j = Map::new();
        for name in check_names() {
            let v = named_check(l, name).expect("known name");
            writeln!(t, "  {name}: {}", flag(l, &v)).unwrap();
            j.insert(name.into(), render::verdict_json(l, &v));
        }
        Ok((t, Value::Object(j)))
    });
    let census = all_subloops(l, caps);
    section(&mut text, &mut doc, "substructures", || {
        let c = census.clone()?;
        let groups = c.subgroups().count();
        let normal = c.normal_subloops().count();
        let t = format!(
            "  subloops: {}\n  subgroups: {groups}\n  normal subloops: {normal}\n  nucleus: {}\n  moufang centre: {}\n  centre: {}\n",
            c.subloops.len(),
            sub(l, &nucleus(l, NucleusPosition::Full)),
            sub(l, &moufang_centre(l).subloop),
            sub(l, &centre(l)),
        );
        let j = json!({ "subloops": c.subloops.len(), "subgroups": groups, "normal_subloops": normal });
        Ok((t, j))
    });
    section(&mut text, &mut doc, "smarandache", || {
        let r = s_classical_report(l, caps)?;
        let mut t = format!("  s_loop: {}\n  s_subloops: {}\n", flag(l, &r.is_s_loop), r.s_subloops.len());
        let mut j = Map::new();
        j.insert("s_loop".into(), render::verdict_json(l, &r.is_s_loop));
        j.insert("s_subloops".into(), json!(r.s_subloops.len()));
        for (name, v) in r.flags.entries() {
            writeln!(t, "  {name}: {}", flag(l, v)).unwrap();
            j.insert(name.into(), render::verdict_json(l, v));
        }
        Ok((t, Value::Object(j)))
    });
    section(&mut text, &mut doc, "lattices", || {
        let c = census?;
        let mut t = String::new();
        let mut j = Map::new();
        let families: [(&str, Vec<SubLoop>); 3] = [
            ("subloop lattice", c.subloops.clone()),
            ("subgroup lattice", c.subgroups().cloned().collect()),
            ("normal subloop lattice", c.normal_subloops().cloned().collect()),
        ];
        for (name, fam) in families {
            let (lt, lj) = lattice_summary(&build_lattice(l, &fam)?, l);
            writeln!(t, "  {name}: {lt}").unwrap();
            j.insert(name.replace(' ', "_"), lj);
        }
        Ok((t, Value::Object(j)))
    });
    Rendered { text, json: Value::Object(doc) }
}

pub fn substructures(l: &FiniteLoop, caps: &Caps) -> Out {
    let c = all_subloops(l, caps)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, s) in c.subloops.iter().enumerate() {
        let tags: Vec<&str> =
            [(c.subgroup[i], "subgroup"), (c.normal[i], "normal")].iter().filter(|t| t.0).map(|t| t.1).collect();
        writeln!(text, "{} order {} {}", sub(l, s), s.order(), tags.join(" ")).unwrap();
        rows.push(json!({ "elements": labels(l, s.elements()), "subgroup": c.subgroup[i], "normal": c.normal[i] }));
    }
    let mut named: Vec<(&str, SubLoop)> = vec![
        ("left nucleus", nucleus(l, NucleusPosition::Left)),
        ("middle nucleus", nucleus(l, NucleusPosition::Middle)),
        ("right nucleus", nucleus(l, NucleusPosition::Right)),
        ("nucleus", nucleus(l, NucleusPosition::Full)),
        ("moufang centre", moufang_centre(l).subloop),
        ("centre", centre(l)),
        ("commutator subloop", derived_subloop(l, DerivedKind::Commutator)),
        ("associator subloop", derived_subloop(l, DerivedKind::Associator)),
    ];
    named.push(("frattini subloop", frattini_subloop(l, caps)?));
    let mut doc = Map::new();
    for (name, s) in &named {
        writeln!(text, "{name}: {}", sub(l, s)).unwrap();
        doc.insert(name.replace(' ', "_"), json!(labels(l, s.elements())));
    }
    doc.insert("subloops".into(), json!(rows));
    Ok(Rendered { text, json: Value::Object(doc) })
}

pub fn smarandache(l: &FiniteLoop, sylow: Option<usize>, caps: &Caps) -> Out {
    let r = s_classical_report(l, caps)?;
    let list = |v: &[SubLoop]| match v {
        [] => "none".to_string(),
        _ => v.iter().map(|s| sub(l, s)).collect::<Vec<_>>().join(" "),
    };
    let json_list = |v: &[SubLoop]| v.iter().map(|s| labels(l, s.elements())).collect::<Vec<_>>();
    let mut text = format!(
        "s_loop: {}\nsubgroup witnesses: {}\ns_subloops: {}\ns_normal_subloops: {}\n",
        flag(l, &r.is_s_loop),
        list(&r.witnesses),
        list(&r.s_subloops),
        list(&r.s_normal_subloops),
    );
    let mut doc = Map::new();
    doc.insert("s_loop".into(), render::verdict_json(l, &r.is_s_loop));
    doc.insert("witnesses".into(), json!(json_list(&r.witnesses)));
    doc.insert("s_subloops".into(), json!(json_list(&r.s_subloops)));
    doc.insert("s_normal_subloops".into(), json!(json_list(&r.s_normal_subloops)));
    for (name, v) in r.flags.entries() {
        writeln!(text, "{name}: {}", flag(l, v)).unwrap();
        doc.insert(name.into(), render::verdict_json(l, v));
    }
    if let Some(p) = sylow {
        let s = s_p_sylow(l, p, caps)?;
        let pairs: Vec<String> =
            s.s_p_sylow_subgroup_pairs.iter().map(|(a, b)| format!("{}>{}", sub(l, a), sub(l, b))).collect();
        writeln!(text, "s_{p}_sylow_subloops: {}", list(&s.s_p_sylow_subloops)).unwrap();
        let pairs = if pairs.is_empty() { "none".to_string() } else { pairs.join(" ") };
        writeln!(text, "s_{p}_sylow_pairs: {pairs}").unwrap();
        writeln!(text, "s_strong_{p}_sylow: {}", s.s_strong_p_sylow).unwrap();
        doc.insert(
            "sylow".into(),
            json!({
                "p": p,
                "subloops": json_list(&s.s_p_sylow_subloops),
                "pairs": s.s_p_sylow_subgroup_pairs.iter().map(|(a, b)| [labels(l, a.elements()), labels(l, b.elements())]).collect::<Vec<_>>(),
                "strong": s.s_strong_p_sylow,
            }),
        );
    }
    Ok(Rendered { text, json: Value::Object(doc) })
}

pub fn represent(l: &FiniteLoop) -> Rendered {
    let block = representation_block(l);
    let albert = validate_albert(&right_regular_representation(l));
    let text = format!("{block}albert: {}\n", render::verdict(l, &albert));
    let json = json!({ "representation": block.lines().collect::<Vec<_>>(), "albert": albert.holds });
    Rendered { text, json }
}

pub fn color(action: ColorAction, source: &Source, coloring: Option<&Path>, order: Option<usize>, caps: &Caps) -> Out {
    match action {
        ColorAction::Enumerate => {
            let order = order.ok_or_else(|| CliError::usage("enumerate needs --order"))?;
            let loops = enumerate_involutory_right_alt(order, caps.coloring_nodes)?;
            let blocks: Vec<String> = loops.iter().map(representation_block).collect();
            let text = format!("count: {}\n\n{}", loops.len(), blocks.join("\n"));
            let json = json!({ "count": loops.len(), "representations": blocks.iter().map(|b| b.lines().collect::<Vec<_>>()).collect::<Vec<_>>() });
            Ok(Rendered { text, json })
        }
        ColorAction::FromLoop => {
            let l = source.load()?;
            let c = loop_to_coloring(&l)?;
            let proper = validate_proper(&c);
            let edges: Vec<[usize; 3]> = c.edges().map(|(u, v, k)| [u, v, k]).collect();
            Ok(Rendered {
                text: c.to_text(),
                json: json!({ "vertices": c.n_vertices(), "edges": edges, "proper": proper.holds }),
            })
        }
        ColorAction::ToLoop => {
            let path = coloring.ok_or_else(|| CliError::usage("to-loop needs --coloring"))?;
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            let c = EdgeColoring::from_text(&text)?;
            let l = coloring_to_loop(&c, None)?;
            Ok(Rendered { text: render::table(&l), json: loop_json(&l) })
        }
    }
}

fn family(l: &FiniteLoop, fam: Family, caps: &Caps) -> Result<Vec<SubLoop>, CliError> {
    let c = all_subloops(l, caps)?;
    Ok(match fam {
        Family::Subloops => c.subloops,
        Family::Subgroups => c.subgroups().cloned().collect(),
        Family::Normal => c.normal_subloops().cloned().collect(),
    })
}

pub fn lattice(l: &FiniteLoop, fam: Family, caps: &Caps) -> Out {
    let lat = build_lattice(l, &family(l, fam, caps)?)?;
    let (summary, mut j) = lattice_summary(&lat, l);
    let mut text = format!("{summary}\n");
    for i in 0..lat.len() {
        writeln!(text, "n{i} {}", lat.node_label(l, i)).unwrap();
    }
    let covers = lat.covers();
    for (a, b) in &covers {
        writeln!(text, "n{a} < n{b}").unwrap();
    }
    let nodes: Vec<Vec<String>> = lat.nodes().iter().map(|s| labels(l, s.elements())).collect();
    j["node_sets"] = json!(nodes);
    j["covers"] = json!(covers);
    Ok(Rendered { text, json: j })
}

pub fn lattice_dot(l: &FiniteLoop, fam: Family, caps: &Caps) -> Result<String, CliError> {
    Ok(build_lattice(l, &family(l, fam, caps)?)?.export_dot(l))
}

pub fn isotope(l: &FiniteLoop, a: Option<&str>, b: Option<&str>, g_loop: bool, caps: &Caps) -> Out {
    if g_loop {
        let v = is_g_loop(l, caps)?;
        return Ok(Rendered {
            text: format!("g_loop: {}\n", render::verdict(l, &v)),
            json: render::verdict_json(l, &v),
        });
    }
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) => (element(l, a)?, element(l, b)?),
        _ => return Err(CliError::usage("give --a and --b, or --g-loop")),
    };
    let iso = principal_isotope(l, a, b)?;
    let text = format!("identity: {}\n{}", iso.label(0), render::table(&iso));
    Ok(Rendered { text, json: loop_json(&iso) })
}

pub fn hyperloop(l: &FiniteLoop, q: Option<&str>, kind: HyperArg, partition: bool) -> Out {
    let kind = match kind {
        HyperArg::Hyper => HyperKind::Hyper,
        HyperArg::AHyper => HyperKind::AHyper,
    };
    if partition {
        let v = hyper_partition_check(l, kind);
        return Ok(Rendered {
            text: format!("partition: {}\n", render::verdict(l, &v)),
            json: render::verdict_json(l, &v),
        });
    }
    let q = element(l, q.ok_or_else(|| CliError::usage("give --q or --partition"))?)?;
    let pairs = match kind {
        HyperKind::Hyper => sm::hyperloop(l, q),
        HyperKind::AHyper => a_hyperloop(l, q),
    };
    let shown: Vec<String> = pairs.iter().map(|&(z, w)| format!("({}, {})", l.label(z), l.label(w))).collect();
    let text = format!("pairs: {}\n{}\n", pairs.len(), shown.join(" "));
    let json = json!({ "count": pairs.len(), "pairs": pairs.iter().map(|&(z, w)| [l.label(z), l.label(w)]).collect::<Vec<_>>() });
    Ok(Rendered { text, json })
}

pub fn coset(l: &FiniteLoop, subloop: &str, side: SideArg, cover: bool, caps: &Caps) -> Out {
    let a = l.subloop(&element_set(l, subloop)?)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    if cover {
        let covers = coset_cover_search(l, &a, side, caps.coset_solutions)?;
        let mut text = format!("covers: {}\n", covers.len());
        let mut rows = Vec::new();
        for c in &covers {
            let parts: Vec<String> = c.iter().map(|(r, s)| format!("{}:{}", l.label(*r), set(l, s))).collect();
            writeln!(text, "{}", parts.join(" ")).unwrap();
            rows.push(c.iter().map(|(r, s)| json!({ "rep": l.label(*r), "coset": labels(l, s) })).collect::<Vec<_>>());
        }
        return Ok(Rendered { text, json: json!({ "count": covers.len(), "covers": rows }) });
    }
    let partition = cosets_partition(l, &a, side);
    let distinct = cosets(l, &a, side).len();
    let mut text = String::new();
    let mut rows = Vec::new();
    for m in l.elements() {
        let (line, c) = match side {
            Side::Right => {
                let c = right_coset(l, &a, m);
                (format!("{}·{} = {}", sub(l, &a), l.label(m), set(l, &c)), c)
            }
            Side::Left => {
                let c = left_coset(l, &a, m);
                (format!("{}·{} = {}", l.label(m), sub(l, &a), set(l, &c)), c)
            }
        };
        writeln!(text, "{line}").unwrap();
        rows.push(json!({ "m": l.label(m), "coset": labels(l, &c) }));
    }
    writeln!(text, "distinct: {distinct}\npartition: {partition}").unwrap();
    Ok(Rendered { text, json: json!({ "cosets": rows, "distinct": distinct, "partition": partition }) })
}
