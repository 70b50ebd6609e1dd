use std::fmt::Display;

use super::config::CorpusConfig;
use super::{ClaimRecord, Verdict, HARD_ASSERTS};
use crate::coloring::{chi_minus_partitions, chromatic_number};
use crate::error::{Error, Result};
use crate::extremal::{
    cumulative_schedule, minimal_repair_with, r_minus_with, r_plus_with, ExtremalLimits, Semantics,
};
use crate::graph::{generate, serialize_graph, Family, Graph, GraphFormat, VertexSet};
use crate::ops::{predicted_values, CombineKind, GraphSpec};
use crate::rainbow::{
    j_profile_with, rainbow_neighbourhood_number, tree_jstar_colouring, validate_witness, JProfile,
    Limits, Mode,
};

pub(super) type Task = Box<dyn FnOnce() -> Result<Vec<ClaimRecord>> + Send>;

/// Largest order for the exhaustive sweep over chromatic colourings.
const SWEEP_ORDER: usize = 10;

fn record(
    claim: &str,
    instance: impl Into<String>,
    predicted: impl Display,
    computed: impl Display,
    ok: bool,
) -> ClaimRecord {
    ClaimRecord {
        claim: claim.to_string(),
        instance: instance.into(),
        predicted: predicted.to_string(),
        computed: computed.to_string(),
        verdict: if ok { Verdict::Confirmed } else { Verdict::Refuted },
        report_only: !HARD_ASSERTS.contains(&claim),
        detail: None,
        runtime_ms: None,
    }
}

/// Predicted and computed values in one vocabulary, compared for equality.
fn compare(claim: &str, instance: impl Into<String>, predicted: impl Display, computed: impl Display) -> ClaimRecord {
    let (p, c) = (predicted.to_string(), computed.to_string());
    let ok = p == c;
    record(claim, instance, p, c, ok)
}

fn not_applicable(claim: &str, instance: impl Into<String>, predicted: impl Display, why: &str) -> ClaimRecord {
    ClaimRecord {
        verdict: Verdict::NotApplicable,
        computed: why.to_string(),
        ..record(claim, instance, predicted, "", true)
    }
}

fn with_detail(mut r: ClaimRecord, detail: impl Into<String>) -> ClaimRecord {
    r.detail = Some(detail.into());
    r
}

fn show(j: Option<usize>) -> String {
    j.map_or_else(|| "inadmissible".to_string(), |v| v.to_string())
}

fn family(name: &str) -> Result<GraphSpec> {
    Ok(GraphSpec::family(name.parse::<Family>()?))
}

/// Records comparing catalogued predictions for `spec` against `J`/`J*`.
fn prediction_records(spec: &GraphSpec, label: &str, j: Option<usize>, j_star: Option<usize>) -> Vec<ClaimRecord> {
    let mut out = Vec::new();
    for p in predicted_values(spec) {
        if let Some(e) = p.j {
            out.push(record(p.claim, format!("{label} [J]"), e, show(j), e.matches(j)));
        }
        if let Some(e) = p.j_star {
            out.push(record(p.claim, format!("{label} [J*]"), e, show(j_star), e.matches(j_star)));
        }
    }
    out
}

/// A scale-refused prediction becomes not-applicable records.
fn refused_records(spec: &GraphSpec, label: &str, why: &str) -> Vec<ClaimRecord> {
    let mut out = Vec::new();
    for p in predicted_values(spec) {
        for (e, tag) in [(p.j, "J"), (p.j_star, "J*")] {
            if let Some(e) = e {
                out.push(not_applicable(p.claim, format!("{label} [{tag}]"), e, why));
            }
        }
    }
    out
}

pub(super) fn tasks(cfg: &CorpusConfig) -> Result<Vec<Task>> {
    let mut tasks: Vec<Task> = Vec::new();
    let profile = Limits::with_max_order(cfg.caps.profile_max_order);
    let extremal = ExtremalLimits {
        max_size: cfg.caps.extremal_max_size,
        profile,
    };

    let mut families = Vec::new();
    families.extend(cfg.paths.iter().map(|n| Family::Path { n }));
    families.extend(cfg.cycles.iter().map(|n| Family::Cycle { n }));
    families.extend(cfg.completes.iter().map(|n| Family::Complete { n }));
    families.extend(cfg.stars.iter().map(|leaves| Family::Star { leaves }));
    families.extend(cfg.nulls.iter().map(|n| Family::Null { n }));
    for f in families {
        let cfg = cfg.clone();
        tasks.push(Box::new(move || {
            let g = generate(&f)?;
            let spec = GraphSpec::family(f);
            graph_records(&g, &f.to_string(), Some(&spec), &cfg, &profile, &extremal)
        }));
    }

    for f in cfg.tree_families() {
        let cfg = cfg.clone();
        tasks.push(Box::new(move || {
            let t = generate(&f)?;
            let label = f.to_string();
            let mut out = graph_records(&t, &label, None, &cfg, &profile, &extremal)?;
            out.extend(tree_records(&t, &label, &f, &profile)?);
            Ok(out)
        }));
    }

    for (i, g) in cfg.random_corpus().into_iter().enumerate() {
        let cfg = cfg.clone();
        tasks.push(Box::new(move || {
            let g6 = serialize_graph(&g, GraphFormat::Graph6);
            let label = format!("R{i:03} {}", g6.trim());
            graph_records(&g, &label, None, &cfg, &profile, &extremal)
        }));
    }

    let operation = Limits::with_max_order(cfg.caps.operation_max_order);
    let mut specs = Vec::new();
    for &kind in &cfg.derivative_kinds {
        for n in cfg.derivative_paths.iter() {
            specs.push(GraphSpec::derived(kind, GraphSpec::family(Family::Path { n })));
        }
        for n in cfg.derivative_cycles.iter() {
            specs.push(GraphSpec::derived(kind, GraphSpec::family(Family::Cycle { n })));
        }
    }
    for (a, b) in &cfg.corona_pairs {
        specs.push(GraphSpec::combined(CombineKind::Corona, family(a)?, family(b)?));
    }
    for (a, b) in &cfg.join_pairs {
        specs.push(GraphSpec::combined(CombineKind::Join, family(a)?, family(b)?));
    }
    for (i, a) in cfg.product_factors.iter().enumerate() {
        for b in &cfg.product_factors[i..] {
            specs.push(GraphSpec::combined(CombineKind::Cartesian, family(a)?, family(b)?));
        }
    }
    for spec in specs {
        if predicted_values(&spec).is_empty() {
            continue;
        }
        tasks.push(Box::new(move || operation_records(&spec, &operation)));
    }

    for n in cfg.kn_minus.iter() {
        for k in n.div_ceil(2)..=n {
            for &sem in &cfg.semantics {
                tasks.push(Box::new(move || kn_record(n, k, sem, true, &extremal)));
            }
        }
    }
    for n in cfg.kn_plus.iter() {
        for k in 1..=n {
            for &sem in &cfg.semantics {
                tasks.push(Box::new(move || kn_record(n, k, sem, false, &extremal)));
            }
        }
    }

    for name in &cfg.repair_graphs {
        let f: Family = name.parse()?;
        tasks.push(Box::new(move || {
            let g = generate(&f)?;
            Ok(vec![repair_record(&g, &format!("{f} [repair list]"), &extremal)?])
        }));
    }

    if cfg.k9_example {
        tasks.push(Box::new(k9_record));
    }
    Ok(tasks)
}

fn profiles(g: &Graph, limits: &Limits) -> Result<(JProfile, JProfile)> {
    Ok((
        j_profile_with(g, Mode::AllVertices, limits)?,
        j_profile_with(g, Mode::InternalOnly, limits)?,
    ))
}

/// Every per-graph claim for one corpus graph.
fn graph_records(
    g: &Graph,
    label: &str,
    spec: Option<&GraphSpec>,
    cfg: &CorpusConfig,
    limits: &Limits,
    extremal: &ExtremalLimits,
) -> Result<Vec<ClaimRecord>> {
    let (all, internal) = profiles(g, limits)?;
    let (j, j_star) = (all.j, internal.j);
    let n = g.order();
    let mut out = match spec {
        Some(spec) => prediction_records(spec, label, j, j_star),
        None => Vec::new(),
    };
    if n == 0 {
        return Ok(out);
    }
    let chi = chromatic_number(g).0;
    let delta = g.min_degree();

    if let Some(j) = j {
        let ok = chi <= j && j <= delta + 1;
        out.push(with_detail(
            record("Fact-chi-J-delta", label, "χ ≤ J ≤ δ+1", format!("{chi} ≤ {j} ≤ {}", delta + 1), ok),
            format!("chi={chi} J={j} delta={delta}"),
        ));
        out.push(compare("Fact-J-Jstar", label, "admits J*", if j_star.is_some() { "admits J*" } else { "no J*" }));
        if delta >= 2 {
            out.push(compare("Fact-pendant-free", label, j, show(j_star)));
        }
        let k_min = all.feasible_k[0];
        let valid = all
            .witnesses
            .get(&k_min)
            .is_some_and(|c| validate_witness(g, c, k_min, Mode::AllVertices));
        out.push(with_detail(
            compare("Lem-2.5", label, "minimal J-colouring", if valid { "minimal J-colouring" } else { "none" }),
            format!("feasible k = {:?}", all.feasible_k),
        ));
    }
    if let (Some(js), true) = (j_star, g.is_connected()) {
        let bound = g.max_degree() + 1;
        out.push(record("Cor-Delta", label, format!("≤ {bound}"), js, js <= bound));
    }
    if let (Some(j), Some(js)) = (j, j_star) {
        if js > j {
            out.push(with_detail(
                compare("Cor-pendant", label, "pendant", if g.has_pendant() { "pendant" } else { "no pendant" }),
                format!("J={j} J*={js}"),
            ));
        }
    }

    if n <= SWEEP_ORDER {
        let admits = j.is_some();
        let rn = rainbow_neighbourhood_number(g)?;
        let sweep = rn.sweep.as_ref().expect("swept at this order");
        let all_rainbow = |b: bool| if b { "all rainbow" } else { "not all rainbow" };
        out.push(with_detail(
            compare("Thm-rchi", label, all_rainbow(admits), all_rainbow(sweep.max == n)),
            format!("r_chi over chromatic colourings: min {} max {} of {n}", sweep.min, sweep.max),
        ));
        out.push(with_detail(
            compare("Thm-2.6", format!("{label} [canonical χ⁻]"), all_rainbow(admits), all_rainbow(rn.canonical == n)),
            format!("canonical χ⁻ colouring {:?}: {} of {n} rainbow", rn.canonical_colouring.colours(), rn.canonical),
        ));
        let partitions = chi_minus_partitions(g);
        let some = partitions.iter().any(|p| partition_all_rainbow(g, p));
        out.push(with_detail(
            compare("Thm-2.6", format!("{label} [some χ⁻]"), all_rainbow(admits), all_rainbow(some)),
            format!("{} χ⁻ partitions examined", partitions.len()),
        ));
    }

    if let Some(j) = j {
        let p = g.size();
        if p <= extremal.max_size {
            let minus = r_minus_with(g, 1, Semantics::Plain, extremal)?.map(|e| e.count);
            let plus = r_plus_with(g, 1, Semantics::Plain, extremal)?.map(|e| e.count);
            out.push(compare(
                "Fact-r1",
                label,
                format!("{p}, {p}"),
                format!("{}, {}", show(minus), show(plus)),
            ));
        }
        if p <= cfg.caps.bonding_table_max_size && p > 0 {
            for &sem in &cfg.semantics {
                for k in 1..=j {
                    let minus = r_minus_with(g, k, sem, extremal)?.map(|e| e.count);
                    let plus = r_plus_with(g, k, sem, extremal)?.map(|e| e.count);
                    let equal = |b: bool| if b { "r⁻ = r⁺" } else { "r⁻ ≠ r⁺" };
                    out.push(with_detail(
                        compare("Thm-4.2", format!("{label} [k={k}, {sem}]"), equal(j == 2), equal(minus == plus)),
                        format!("J={j} r⁻={} r⁺={}", show(minus), show(plus)),
                    ));
                }
            }
        }
    } else if g.is_connected() && g.size() <= extremal.max_size {
        out.push(repair_record(g, label, extremal)?);
    }
    Ok(out)
}

fn partition_all_rainbow(g: &Graph, classes: &[VertexSet]) -> bool {
    g.vertices()
        .iter()
        .all(|v| classes.iter().all(|c| !c.intersection(g.closed_neighbourhood(v)).is_empty()))
}

fn tree_records(t: &Graph, label: &str, f: &Family, limits: &Limits) -> Result<Vec<ClaimRecord>> {
    let mut out = Vec::new();
    if t.order() < 3 {
        out.push(not_applicable("Thm-2.1", format!("{label} [J < J*]"), "J < J*", "no internal vertex"));
        return Ok(out);
    }
    let (all, internal) = profiles(t, limits)?;
    let spec = GraphSpec::family(*f);
    out.extend(prediction_records(&spec, label, all.j, internal.j));
    let lt = matches!((all.j, internal.j), (Some(a), Some(b)) if a < b);
    out.push(with_detail(
        compare("Thm-2.1", format!("{label} [J < J*]"), "J < J*", if lt { "J < J*" } else { "J ≥ J*" }),
        format!("J={} J*={}", show(all.j), show(internal.j)),
    ));
    let c = tree_jstar_colouring(t)?;
    let valid = c.k() == 3 && validate_witness(t, &c, 3, Mode::InternalOnly);
    out.push(with_detail(
        compare("Thm-2.1", format!("{label} [tree colouring]"), "valid 3-colouring", if valid { "valid 3-colouring" } else { "invalid" }),
        format!("{:?}", c.colours()),
    ));
    let mut bound = record("Thm-2.1", format!("{label} [J* ≤ 3]"), "≤ 3", show(internal.j), internal.j.is_some_and(|v| v <= 3));
    bound.report_only = true;
    out.push(bound);
    Ok(out)
}

fn operation_records(spec: &GraphSpec, limits: &Limits) -> Result<Vec<ClaimRecord>> {
    let label = spec.to_string();
    let g = spec.build()?;
    match profiles(&g, limits) {
        Ok((all, internal)) => {
            let mut out = prediction_records(spec, &label, all.j, internal.j);
            for r in &mut out {
                r.detail = Some(format!("n={} p={} feasible k = {:?}", g.order(), g.size(), all.feasible_k));
            }
            Ok(out)
        }
        Err(Error::ScaleExceeded(why)) => Ok(refused_records(spec, &label, &why)),
        Err(e) => Err(e),
    }
}

fn kn_record(n: usize, k: usize, sem: Semantics, minus: bool, limits: &ExtremalLimits) -> Result<Vec<ClaimRecord>> {
    let g = generate(&Family::Complete { n })?;
    let (predicted, computed, which) = if minus {
        (n - k, r_minus_with(&g, k, sem, limits)?, "r⁻")
    } else {
        ((n + 1 - k) * (n - k) / 2, r_plus_with(&g, k, sem, limits)?, "r⁺")
    };
    let mut r = compare(
        "Thm-4.1",
        format!("K{n} [k={k}, {which}, {sem}]"),
        predicted,
        show(computed.as_ref().map(|e| e.count)),
    );
    if let Some(e) = computed {
        r.detail = Some(format!("witness {:?}", e.witness));
    }
    r.report_only = !minus;
    Ok(vec![r])
}

fn repair_record(g: &Graph, label: &str, limits: &ExtremalLimits) -> Result<ClaimRecord> {
    let repair = minimal_repair_with(g, limits)?;
    let bound = (g.size() + 1).saturating_sub(g.order());
    let count = repair.removed.len();
    Ok(with_detail(
        record("Lem-4.1", label, format!("≤ {bound}"), count, count <= bound),
        format!("removed {:?}, J after = {}", repair.removed, repair.j),
    ))
}

fn k9_record() -> Result<Vec<ClaimRecord>> {
    let g = generate(&Family::Complete { n: 9 })?;
    let steps = cumulative_schedule(&g, 9, Semantics::Plain);
    let tail: Vec<String> = steps
        .iter()
        .filter(|s| s.k <= 5)
        .map(|s| s.cumulative.to_string())
        .collect();
    let detail: Vec<String> = steps.iter().map(|s| format!("k={}: +{}", s.k, s.step)).collect();
    Ok(vec![with_detail(
        compare("Ex-K9", "K9 [cumulative, k=5..1, plain]", "4, 6, 10, 16, 36", tail.join(", ")),
        detail.join("; "),
    )])
}
