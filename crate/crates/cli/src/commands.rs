//! One function per verb. Each returns the stdout document and, for verbs
//! whose report can carry a failed verdict, the error to exit with.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use sdp::assoc::{self, AssocCondition, CheckResult, Domain, SizeCaps};
use sdp::experiment::{self, Sampler};
use sdp::hom;
use sdp::internal::{self, InternalSdp, SdpCandidate};
use sdp::mul::{self, CayleyTable};
use sdp::symbolic::{self, render, render_word, ConditionForm, Mode};
use sdp::{Elem, ElemTuple, FiniteGroup, TotalSystem};

use crate::args::{Caps, Command, ExperimentMode, Format, SamplerKind};
use crate::error::CliError;
use crate::files::{load_group, load_monoid, load_system, read_json, to_pretty, write_json};

pub struct Outcome {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn json<T: Serialize>(value: &T) -> Self {
        Outcome { stdout: to_pretty(value), failure: None }
    }

    fn failing_if(mut self, failure: Option<CliError>) -> Self {
        self.failure = failure;
        self
    }
}

impl From<Caps> for SizeCaps {
    fn from(c: Caps) -> Self {
        SizeCaps { triple: c.triple_cap, pair: c.pair_cap }
    }
}

pub fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::ValidateGroup { group } => validate_group(&group),
        Command::CheckSystem { system } => check_system(&system),
        Command::BuildSdp { system, out, caps } => build_sdp(&system, out.as_deref(), caps.into()),
        Command::Table { system, caps } => table(&system, caps.into()),
        Command::Mul { system, tuples } => mul_tuples(&system, &tuples),
        Command::CheckAssoc { system, condition, component, brute_force, caps, timing } => {
            check_assoc(&system, condition.as_deref(), component.as_deref(), brute_force, caps.into(), timing)
        }
        Command::GenAxioms { max_k, format, all, verify_reference, systems, literal } => {
            gen_axioms(max_k, format, all, verify_reference, systems, literal)
        }
        Command::Decompose { group, factors, out, caps } => decompose(&group, &factors, out.as_deref(), caps.into()),
        Command::CheckHom { system, target, maps, brute_force, caps } => {
            check_hom(&system, &target, &maps, brute_force, caps.into())
        }
        Command::Experiment { seed, count, shape, mode, sampler, p, timing } => {
            run_experiment(seed, count, &shape, mode, sampler, p, timing)
        }
    }
}

fn parse_indices<const N: usize>(s: &str, what: &str) -> Result<[usize; N], CliError> {
    let bad = || CliError::InvalidArgument(format!("{what}: expected {N} comma-separated integers, got {s:?}"));
    let parts: Vec<usize> = s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    parts.try_into().map_err(|_| bad())
}

fn load_normalized(path: &Path) -> Result<TotalSystem, CliError> {
    let sys = load_system(path)?;
    let report = sys.check_normalized();
    if !report.is_normalized() {
        return Err(CliError::NotNormalized(report.violations.len()));
    }
    Ok(sys)
}

fn validate_group(path: &Path) -> Result<Outcome, CliError> {
    let g = load_group(path)?;
    Ok(Outcome::json(&json!({
        "valid": true,
        "order": g.order(),
        "identity": g.identity(),
        "abelian": g.is_abelian(),
        "inverses": g.elements().map(|x| g.inv(x)).collect::<Vec<_>>(),
    })))
}

fn check_system(path: &Path) -> Result<Outcome, CliError> {
    let sys = load_system(path)?;
    let report = sys.check_normalized();
    Ok(Outcome::json(&json!({
        "r": sys.r(),
        "factor_orders": sys.factors().iter().map(FiniteGroup::order).collect::<Vec<_>>(),
        "order": sys.order(),
        "normalized": report.is_normalized(),
        "violations": report.violations,
    })))
}

#[derive(Serialize)]
struct TableDoc {
    order: usize,
    /// `elements[n]` is the tuple with index `n`, in lexicographic order.
    elements: Vec<ElemTuple>,
    table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    associative: Option<bool>,
}

fn cayley(sys: &TotalSystem, caps: SizeCaps) -> Result<CayleyTable, CliError> {
    CayleyTable::build(sys, caps.pair).ok_or(CliError::SizeCapExceeded { size: sys.order(), cap: caps.pair })
}

fn table_doc(t: &CayleyTable, associative: Option<bool>) -> TableDoc {
    TableDoc { order: t.order(), elements: t.codec().tuples().collect(), table: t.rows(), associative }
}

fn build_sdp(path: &Path, out: Option<&Path>, caps: SizeCaps) -> Result<Outcome, CliError> {
    let sys = load_normalized(path)?;
    let t = cayley(&sys, caps)?;
    let associative = assoc::brute_force_associative(&sys, caps)?.holds;
    let doc = table_doc(&t, Some(associative));
    match out {
        Some(p) => {
            write_json(p, &doc)?;
            Ok(Outcome::json(
                &json!({ "order": doc.order, "associative": associative, "out": p.display().to_string() }),
            ))
        }
        None => Ok(Outcome::json(&doc)),
    }
}

fn table(path: &Path, caps: SizeCaps) -> Result<Outcome, CliError> {
    let sys = load_system(path)?;
    Ok(Outcome::json(&table_doc(&cayley(&sys, caps)?, None)))
}

fn parse_tuple(sys: &TotalSystem, s: &str) -> Result<ElemTuple, CliError> {
    let xs: Vec<usize> = serde_json::from_str(s)
        .map_err(|e| CliError::InvalidArgument(format!("tuple {s:?} is not an index list: {e}")))?;
    if xs.len() != sys.r() {
        return Err(CliError::InvalidArgument(format!("tuple {s:?} has {} entries, r = {}", xs.len(), sys.r())));
    }
    for (n, &x) in xs.iter().enumerate() {
        let order = sys.factor(n + 1).order();
        if x >= order {
            return Err(CliError::InvalidArgument(format!(
                "tuple {s:?}: entry {} is {x}, H_{} has order {order}",
                n + 1,
                n + 1
            )));
        }
    }
    Ok(ElemTuple::from_indices(&xs))
}

fn mul_tuples(path: &Path, tuples: &[String]) -> Result<Outcome, CliError> {
    let sys = load_system(path)?;
    let ts = tuples.iter().map(|s| parse_tuple(&sys, s)).collect::<Result<Vec<_>, _>>()?;
    let product = mul::mu_word(&sys, &ts).expect("at least one tuple");
    Ok(Outcome::json(&json!({ "operands": ts, "product": product })))
}

#[derive(Serialize)]
struct AssocEntry {
    #[serde(flatten)]
    condition: AssocCondition,
    #[serde(flatten)]
    result: CheckResult,
}

fn check_assoc(
    path: &Path,
    condition: Option<&str>,
    component: Option<&str>,
    brute_force: bool,
    caps: SizeCaps,
    timing: bool,
) -> Result<Outcome, CliError> {
    let sys = load_normalized(path)?;
    let start = Instant::now();
    let conditions: Vec<AssocEntry> = if let Some(s) = component {
        let [k, j, i, l] = parse_indices::<4>(s, "--component")?;
        let result = assoc::check_component(&sys, k, j, i, l)?;
        vec![AssocEntry { condition: AssocCondition::component(k, j, i, l), result }]
    } else if let Some(s) = condition {
        let [k, j, i] = parse_indices::<3>(s, "--condition")?;
        let result =
            assoc::check_assoc(&sys, Domain::Elementary(k), Domain::Elementary(j), Domain::Elementary(i), caps)?;
        vec![AssocEntry { condition: AssocCondition::new(k, j, i), result }]
    } else {
        assoc::check_all_elementary(&sys)
            .into_iter()
            .map(|(condition, result)| AssocEntry { condition, result })
            .collect()
    };
    let holds = conditions.iter().all(|c| c.result.holds);
    let mut doc = json!({ "holds": holds, "conditions": conditions });
    if brute_force {
        doc["brute_force"] = serde_json::to_value(assoc::brute_force_associative(&sys, caps)?).expect("serializes");
    }
    if timing {
        doc["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Outcome::json(&doc))
}

#[derive(Serialize)]
struct AxiomRow<'a> {
    label: String,
    /// Label of the class representative; absent for vacuous conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<&'a str>,
    lhs: String,
    rhs: String,
    form: &'a ConditionForm,
}

fn gen_axioms(
    max_k: usize,
    format: Format,
    all: bool,
    verify: bool,
    systems: u64,
    literal: bool,
) -> Result<Outcome, CliError> {
    if max_k < 2 {
        return Err(CliError::InvalidArgument(format!("--max-k must be at least 2, got {max_k}")));
    }
    if verify {
        if max_k > 5 {
            return Err(CliError::InvalidArgument(format!("the reference table stops at k = 5, got {max_k}")));
        }
        let report = symbolic::verify_reference_table(max_k, systems)?;
        let exact_low = report.rows.iter().filter(|r| !r.label.starts_with("A[5")).all(|r| r.matches);
        let failure = if !exact_low {
            Some(CliError::Mismatch("a row with k <= 4 differs from the reference".into()))
        } else if !report.mismatches_resolved() {
            Some(CliError::Mismatch("a k = 5 mismatch was not resolved in favour of the generated form".into()))
        } else {
            None
        };
        let doc = json!({
            "rows": report.rows.len(),
            "all_match": report.all_match(),
            "mismatches_resolved": report.mismatches_resolved(),
            "report": report,
        });
        return Ok(Outcome::json(&doc).failing_if(failure));
    }
    let mode = if literal { Mode::Literal } else { Mode::Reduced };
    let rows: Vec<(ConditionForm, Option<String>)> = if all {
        symbolic::classify_all(mode, max_k).into_iter().map(|c| (c.form, c.class)).collect()
    } else {
        symbolic::canonical_representatives(mode, max_k)
            .into_iter()
            .map(|c| {
                let label = c.label();
                (c, Some(label))
            })
            .collect()
    };
    match format {
        Format::Text => {
            let width = rows.iter().map(|(c, _)| c.label().len()).max().unwrap_or(0);
            let lines: Vec<String> = rows
                .iter()
                .map(|(c, class)| {
                    let tag = match (all, class) {
                        (false, _) => String::new(),
                        (true, Some(cl)) => format!("  [{cl}]"),
                        (true, None) => "  [vacuous]".to_string(),
                    };
                    format!("{:<width$}  {}{tag}", c.label(), render(c))
                })
                .collect();
            Ok(Outcome { stdout: lines.join("\n"), failure: None })
        }
        Format::Structured => {
            let out: Vec<AxiomRow> = rows
                .iter()
                .map(|(c, class)| AxiomRow {
                    label: c.label(),
                    class: class.as_deref(),
                    lhs: render_word(&c.lhs),
                    rhs: render_word(&c.rhs),
                    form: c,
                })
                .collect();
            Ok(Outcome::json(&json!({ "mode": mode_name(mode), "max_k": max_k, "conditions": out })))
        }
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Literal => "literal",
        Mode::Reduced => "reduced",
    }
}

fn parse_factors(s: &str, order: usize) -> Result<Vec<Vec<Elem>>, CliError> {
    s.split(';')
        .map(|factor| {
            factor
                .split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| match x.parse::<usize>() {
                    Ok(n) if n < order => Ok(Elem::from(n)),
                    _ => Err(CliError::InvalidArgument(format!(
                        "--factors: {x:?} is not an element index below {order}"
                    ))),
                })
                .collect()
        })
        .collect()
}

fn decompose(path: &Path, factors: &str, out: Option<&Path>, caps: SizeCaps) -> Result<Outcome, CliError> {
    let g = load_group(path)?;
    let gens = parse_factors(factors, g.order())?;
    let cand = SdpCandidate::generated_by(g, &gens)?;
    let report = internal::check_internal_sdp(&cand);
    let mut doc = json!({
        "factor_orders": cand.factors.iter().map(|h| h.order()).collect::<Vec<_>>(),
        "factors": cand.factors.iter().map(|h| h.members()).collect::<Vec<_>>(),
        "report": report,
    });
    if report.is_sdp {
        let sys = InternalSdp::new(cand.clone())?.extract_total_system()?;
        doc["roundtrip"] = serde_json::to_value(internal::roundtrip_report(&cand, caps)?).expect("serializes");
        match out {
            Some(p) => {
                write_json(p, &sys.to_file())?;
                doc["out"] = json!(p.display().to_string());
            }
            None => doc["system"] = serde_json::to_value(sys.to_file()).expect("serializes"),
        }
    }
    Ok(Outcome::json(&doc))
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    maps: Vec<Vec<usize>>,
}

fn check_hom(path: &Path, target: &Path, maps: &Path, brute_force: bool, caps: SizeCaps) -> Result<Outcome, CliError> {
    let sys = load_normalized(path)?;
    let target = load_monoid(target)?;
    let file: MapFile = read_json(maps)?;
    let comps = file.maps.into_iter().map(|f| f.into_iter().map(Elem::from).collect()).collect();
    let m = hom::assemble(sys, target, comps)?;
    let report = hom::check_hom_all(&m);
    let mut doc = json!({ "holds": report.holds, "pairs": report.pairs });
    match hom::check_commutator_criterion(&m) {
        Ok(c) => doc["commutator"] = serde_json::to_value(c).expect("serializes"),
        Err(e) => doc["commutator_skipped"] = json!(e.to_string()),
    }
    if brute_force {
        doc["brute_force"] = serde_json::to_value(hom::brute_force_hom(&m, caps)?).expect("serializes");
    }
    Ok(Outcome::json(&doc))
}

fn run_experiment(
    seed: u64,
    count: u64,
    shape: &str,
    mode: ExperimentMode,
    sampler: SamplerKind,
    p: f64,
    timing: bool,
) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (mut doc, disagreements) = match mode {
        ExperimentMode::Assoc => {
            let shape: Vec<usize> =
                shape.split(',').map(|x| x.trim().parse().ok().filter(|&n| n >= 1)).collect::<Option<_>>().ok_or_else(
                    || CliError::InvalidArgument(format!("--shape: expected factor orders, got {shape:?}")),
                )?;
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::InvalidArgument(format!("--p must lie in [0, 1], got {p}")));
            }
            let sampler = match sampler {
                SamplerKind::Mixed => Sampler::Mixed(p),
                SamplerKind::Uniform => Sampler::Uniform,
            };
            let order: usize = shape.iter().product();
            let cap = SizeCaps::default().triple;
            if order > cap {
                return Err(CliError::SizeCapExceeded { size: order, cap });
            }
            let e = experiment::assoc_experiment(seed, count, &shape, sampler)?;
            let n = e.disagreements.len();
            (serde_json::to_value(e).expect("serializes"), n)
        }
        ExperimentMode::Hom => {
            let e = experiment::hom_experiment(seed, count)?;
            let n = e.disagreements.len() + e.commutator_disagreements.len();
            (serde_json::to_value(e).expect("serializes"), n)
        }
    };
    if timing {
        doc["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    let failure = (disagreements > 0).then(|| CliError::Disagreement(format!("{disagreements} disagreeing trial(s)")));
    Ok(Outcome::json(&doc).failing_if(failure))
}
