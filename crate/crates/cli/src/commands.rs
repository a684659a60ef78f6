use anyhow::{anyhow, bail, Result};
use cellkit::cells::{left_cells, right_cells, two_sided_cells, CellModule};
use cellkit::tau::{
    self, conjecture_check, in_d_r, standard_pairs, string_decomposition, tau_delta_partition, verify_all,
    vogan_tau_partition, AdmissibilityReport, AdmissiblePair, LambdaConvention, Verdict, WitnessKind,
};
use cellkit::{Element, KlTable, LaurentPoly};
use serde::Serialize;

use crate::config::{Format, LambdaArg, SideArg, VariantArg};
use crate::output::{dot, generators, labels, to_json, word, words, Header, PairOut};
use crate::{Outcome, Session};

fn json_only(ctx: &Session, command: &str) -> Result<()> {
    if ctx.format == Format::Dot {
        bail!("format: DOT output is available for `group` and `cells`, not `{command}`");
    }
    Ok(())
}

fn kl_table(ctx: &Session) -> KlTable {
    KlTable::compute(ctx.job.group.clone(), ctx.job.weights.clone())
}

fn lambda(arg: LambdaArg) -> LambdaConvention {
    match arg {
        LambdaArg::RPi => LambdaConvention::EnhancedDescent,
        LambdaArg::LeftCell => LambdaConvention::StrictLeftCell,
    }
}

#[derive(Serialize)]
struct ElementOut {
    word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    length: usize,
    right_descents: Vec<usize>,
    left_descents: Vec<usize>,
}

#[derive(Serialize)]
struct GroupDoc {
    #[serde(flatten)]
    header: Header,
    matrix: Vec<Vec<u32>>,
    max_length: usize,
    elements: Vec<ElementOut>,
}

pub fn group(ctx: &Session) -> Result<Outcome> {
    let g = &*ctx.job.group;
    if ctx.format == Format::Dot {
        let names = words(g, &g.elements().collect::<Vec<_>>());
        let mut edges = Vec::new();
        for w in g.elements() {
            for y in g.bruhat_lower(w) {
                if g.length(y) + 1 == g.length(w) {
                    edges.push((y, w));
                }
            }
        }
        return Ok(Outcome::ok(dot("bruhat", &names, &edges)));
    }
    let doc = GroupDoc {
        header: Header::new("group", &ctx.job),
        matrix: g.matrix().rows(),
        max_length: g.max_length(),
        elements: g
            .elements()
            .map(|w| ElementOut {
                word: word(g, w),
                label: g.dihedral_label(w),
                length: g.length(w),
                right_descents: generators(g.right_descents(w)),
                left_descents: generators(g.left_descents(w)),
            })
            .collect(),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct PolyOut {
    y: String,
    w: String,
    p: LaurentPoly,
}

#[derive(Serialize)]
struct MOut {
    s: usize,
    z: String,
    y: String,
    m: LaurentPoly,
}

#[derive(Serialize)]
struct KlDoc {
    #[serde(flatten)]
    header: Header,
    polynomials: Vec<PolyOut>,
    m: Vec<MOut>,
}

pub fn klpoly(ctx: &Session, w: Option<&str>, y: Option<&str>) -> Result<Outcome> {
    json_only(ctx, "klpoly")?;
    let w = w.map(|s| ctx.job.element(s)).transpose()?;
    let y = y.map(|s| ctx.job.element(s)).transpose()?;
    let table = kl_table(ctx);
    let g = table.group();
    let columns: Vec<Element> = match w {
        Some(w) => vec![w],
        None => g.elements().collect(),
    };
    let mut polynomials = Vec::new();
    let mut m = Vec::new();
    for &x in &columns {
        for (z, p) in table.p_column(x) {
            let z = *z as usize;
            if y.is_none_or(|y| y == z) {
                polynomials.push(PolyOut {
                    y: word(g, z),
                    w: word(g, x),
                    p: p.clone(),
                });
            }
        }
        for s in 0..g.rank() {
            for (z, poly) in table.m_column(s, x) {
                let z = *z as usize;
                if y.is_none_or(|y| y == z) {
                    m.push(MOut {
                        s: s + 1,
                        z: word(g, z),
                        y: word(g, x),
                        m: poly.clone(),
                    });
                }
            }
        }
    }
    let doc = KlDoc {
        header: Header::new("klpoly", &ctx.job),
        polynomials,
        m,
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct CellOut {
    id: usize,
    size: usize,
    elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize)]
struct CellsDoc {
    #[serde(flatten)]
    header: Header,
    side: &'static str,
    count: usize,
    cells: Vec<CellOut>,
    /// Covering pairs `[lower, upper]` of the induced order on cells.
    cell_order: Vec<[usize; 2]>,
}

pub fn cells(ctx: &Session, side: SideArg) -> Result<Outcome> {
    let table = kl_table(ctx);
    let g = table.group();
    let partition = match side {
        SideArg::Left => left_cells(&table),
        SideArg::Right => right_cells(&table),
        SideArg::TwoSided => two_sided_cells(&table),
    };
    let edges = partition.hasse_edges();
    if ctx.format == Format::Dot {
        let names: Vec<String> = partition
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, b)| format!("{i}: {} ({})", word(g, b[0]), b.len()))
            .collect();
        return Ok(Outcome::ok(dot(&format!("{}-cells", partition.side().name()), &names, &edges)));
    }
    let doc = CellsDoc {
        header: Header::new("cells", &ctx.job),
        side: partition.side().name(),
        count: partition.len(),
        cells: partition
            .blocks()
            .iter()
            .enumerate()
            .map(|(id, b)| CellOut {
                id,
                size: b.len(),
                elements: words(g, b),
                labels: labels(g, b),
            })
            .collect(),
        cell_order: edges.into_iter().map(|(a, b)| [a, b]).collect(),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct MatrixOut {
    generator: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

#[derive(Serialize)]
struct ModmatDoc {
    #[serde(flatten)]
    header: Header,
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    /// Column `j` is the image of the `j`-th basis vector.
    matrices: Vec<MatrixOut>,
    relations_hold: bool,
}

pub fn modmat(ctx: &Session, cell_of: Option<&str>, basis: Option<&str>) -> Result<Outcome> {
    json_only(ctx, "modmat")?;
    let table = kl_table(ctx);
    let g = table.group();
    let left = left_cells(&table);
    let module = match (cell_of, basis) {
        (_, Some(list)) => {
            let basis = list.split(';').map(|s| ctx.job.element(s)).collect::<Result<Vec<_>>>()?;
            CellModule::new(&table, &left, &basis).map_err(|e| anyhow!("basis: {e}"))?
        }
        (Some(x), None) => {
            let x = ctx.job.element(x)?;
            CellModule::canonical(&table, &left, &left.blocks()[left.block_of(x)]).expect("left cells are closed")
        }
        (None, None) => bail!("cell-of: missing; pass --cell-of <word> or --basis"),
    };
    let doc = ModmatDoc {
        header: Header::new("modmat", &ctx.job),
        basis: words(g, module.basis()),
        labels: labels(g, module.basis()),
        matrices: (0..g.rank())
            .map(|s| MatrixOut {
                generator: s + 1,
                rows: module.matrix(s).to_rows(),
            })
            .collect(),
        relations_hold: module.check_relations(&table).is_ok(),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct CosetOut {
    min: String,
    max: String,
    s_string: Vec<String>,
    t_string: Vec<String>,
}

#[derive(Serialize)]
struct StringsDoc {
    #[serde(flatten)]
    header: Header,
    pair: [usize; 2],
    m: u32,
    cosets: Vec<CosetOut>,
}

pub fn strings(ctx: &Session, pair: &[usize]) -> Result<Outcome> {
    json_only(ctx, "strings")?;
    let g = &*ctx.job.group;
    let (s, t) = ctx.job.pair(pair)?;
    let cosets = string_decomposition(g, s, t).map_err(|e| anyhow!("pair: {e}"))?;
    let doc = StringsDoc {
        header: Header::new("strings", &ctx.job),
        pair: [s + 1, t + 1],
        m: g.matrix().get(s, t),
        cosets: cosets
            .iter()
            .map(|c| CosetOut {
                min: word(g, c.min),
                max: word(g, c.max),
                s_string: words(g, &c.s_string),
                t_string: words(g, &c.t_string),
            })
            .collect(),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct ImageOut {
    element: String,
    image: String,
}

#[derive(Serialize)]
struct OperationDoc {
    #[serde(flatten)]
    header: Header,
    operation: &'static str,
    pair: [usize; 2],
    results: Vec<ImageOut>,
}

pub fn star_or_tilde(ctx: &Session, pair: &[usize], element: Option<&str>, is_star: bool) -> Result<Outcome> {
    json_only(ctx, if is_star { "star" } else { "tilde" })?;
    let g = &*ctx.job.group;
    let (s, t) = ctx.job.pair(pair)?;
    let apply = |w| {
        if is_star {
            tau::star(g, w, s, t)
        } else {
            tau::tilde(g, &ctx.job.weights, w, s, t)
        }
    };
    let domain: Vec<Element> = match element {
        Some(text) => vec![ctx.job.element(text)?],
        None => g.elements().filter(|&w| in_d_r(g, w, s, t)).collect(),
    };
    let mut results = Vec::new();
    for w in domain {
        let image = apply(w).map_err(|e| anyhow!("element {}: {e}", word(g, w)))?;
        results.push(ImageOut {
            element: word(g, w),
            image: word(g, image),
        });
    }
    if element.is_none() && results.is_empty() {
        apply(0).map_err(|e| anyhow!("pair: {e}"))?;
    }
    let doc = OperationDoc {
        header: Header::new(if is_star { "star" } else { "tilde" }, &ctx.job),
        operation: if is_star { "star" } else { "tilde" },
        pair: [s + 1, t + 1],
        results,
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct TauDoc {
    #[serde(flatten)]
    header: Header,
    variant: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<&'static str>,
    pairs: Vec<PairOut>,
    rounds: usize,
    class_counts: Vec<usize>,
    count: usize,
    classes: Vec<Vec<String>>,
}

pub fn tau(ctx: &Session, variant: VariantArg, lambda_arg: LambdaArg) -> Result<Outcome> {
    json_only(ctx, "tau")?;
    let g = &*ctx.job.group;
    let wf = &ctx.job.weights;
    let (partition, lambda_name) = match variant {
        VariantArg::Vogan => (vogan_tau_partition(g, wf).map_err(|e| anyhow!("weights: {e}"))?, None),
        VariantArg::Delta => {
            let mut pairs = standard_pairs(g, wf);
            verify_all(g, wf, &mut pairs)?;
            let l = lambda(lambda_arg);
            (tau_delta_partition(g, wf, &pairs, l)?, Some(l.name()))
        }
    };
    let doc = TauDoc {
        header: Header::new("tau", &ctx.job),
        variant: match variant {
            VariantArg::Vogan => "vogan",
            VariantArg::Delta => "delta",
        },
        lambda: lambda_name,
        pairs: partition.pairs().iter().map(PairOut::from).collect(),
        rounds: partition.rounds(),
        class_counts: partition.class_counts(),
        count: partition.len(),
        classes: partition.classes().iter().map(|c| words(g, c)).collect(),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Serialize)]
struct CellVerdictOut {
    cell: Vec<String>,
    image: Vec<String>,
    bijective_onto_cell: bool,
    module_isomorphism: bool,
}

#[derive(Serialize)]
struct PairReportOut {
    #[serde(flatten)]
    pair: PairOut,
    condition1: bool,
    condition2: bool,
    condition3: bool,
    admissible: bool,
    strongly_admissible: bool,
    passed: bool,
    cells: Vec<CellVerdictOut>,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct AdmissibleDoc {
    #[serde(flatten)]
    header: Header,
    strong: bool,
    all_passed: bool,
    pairs: Vec<PairReportOut>,
}

fn parse_map(ctx: &Session, text: &str) -> Result<Vec<(Element, Element)>> {
    text.split(';')
        .filter(|item| !item.trim().is_empty())
        .map(|item| {
            let (a, b) = item.split_once("->").ok_or_else(|| anyhow!("map: expected `u -> v`, got {item:?}"))?;
            Ok((ctx.job.element(a)?, ctx.job.element(b)?))
        })
        .collect()
}

fn report_out(ctx: &Session, pair: &AdmissiblePair, report: &AdmissibilityReport) -> PairReportOut {
    let g = &*ctx.job.group;
    PairReportOut {
        pair: PairOut::new(report.kind, report.generators),
        condition1: report.condition1(),
        condition2: report.condition2(),
        condition3: report.condition3(),
        admissible: pair.is_admissible(),
        strongly_admissible: pair.is_strongly_admissible(),
        passed: report.passed(),
        cells: report
            .cells
            .iter()
            .map(|c| CellVerdictOut {
                cell: words(g, &c.cell),
                image: words(g, &c.image),
                bijective_onto_cell: c.bijective_onto_cell,
                module_isomorphism: c.module_isomorphism,
            })
            .collect(),
        failures: report.failures(g),
    }
}

pub fn admissible_check(ctx: &Session, pair: Option<&[usize]>, strong: bool, map: Option<&str>) -> Result<Outcome> {
    json_only(ctx, "admissible-check")?;
    let g = &*ctx.job.group;
    let wf = &ctx.job.weights;
    let mut pairs = match (pair, map) {
        (Some(pair), Some(map)) => {
            let (s, t) = ctx.job.pair(pair)?;
            vec![AdmissiblePair::custom(g, s, t, &parse_map(ctx, map)?).map_err(|e| anyhow!("map: {e}"))?]
        }
        (None, Some(_)) => bail!("pair: --map needs --pair"),
        (Some(pair), None) => {
            let (s, t) = ctx.job.pair(pair)?;
            let built = if wf.get(s) == wf.get(t) {
                AdmissiblePair::delta_geq3(g, wf, s, t)
            } else {
                AdmissiblePair::delta_pi(g, wf, s, t)
            };
            vec![built.map_err(|e| anyhow!("pair: {e}"))?]
        }
        (None, None) => standard_pairs(g, wf),
    };
    let reports: Vec<PairReportOut> = pairs
        .iter_mut()
        .map(|p| {
            let report = p.verify(wf, strong);
            report_out(ctx, p, &report)
        })
        .collect();
    let all_passed = reports.iter().all(|r| r.passed);
    let doc = AdmissibleDoc {
        header: Header::new("admissible-check", &ctx.job),
        strong,
        all_passed,
        pairs: reports,
    };
    Ok(Outcome {
        text: to_json(&doc),
        failed: !all_passed,
    })
}

#[derive(Serialize)]
struct WitnessOut {
    y: String,
    w: String,
    kind: &'static str,
    round: Option<usize>,
}

#[derive(Serialize)]
struct ConjectureDoc {
    #[serde(flatten)]
    header: Header,
    lambda: &'static str,
    verdict: &'static str,
    left_cells: usize,
    two_sided_cells: usize,
    tau_classes: usize,
    refined_classes: usize,
    rounds: usize,
    class_counts: Vec<usize>,
    pairs: Vec<PairOut>,
    witness: Option<WitnessOut>,
}

pub fn conjecture(ctx: &Session, lambda_arg: LambdaArg) -> Result<Outcome> {
    json_only(ctx, "conjecture")?;
    let table = kl_table(ctx);
    let g = table.group();
    let l = lambda(lambda_arg);
    let report = conjecture_check(&table, l)?;
    let doc = ConjectureDoc {
        header: Header::new("conjecture", &ctx.job),
        lambda: l.name(),
        verdict: report.verdict.name(),
        left_cells: report.left_cells,
        two_sided_cells: report.two_sided_cells,
        tau_classes: report.tau_classes,
        refined_classes: report.refined_classes,
        rounds: report.rounds,
        class_counts: report.class_counts.clone(),
        pairs: report.pairs.iter().map(PairOut::from).collect(),
        witness: report.witness.map(|w| WitnessOut {
            y: word(g, w.y),
            w: word(g, w.w),
            kind: match w.kind {
                WitnessKind::NotSeparated => "not-separated",
                WitnessKind::LeftCellSplit { .. } => "left-cell-split",
            },
            round: match w.kind {
                WitnessKind::LeftCellSplit { round } => Some(round),
                WitnessKind::NotSeparated => None,
            },
        }),
    };
    Ok(Outcome {
        text: to_json(&doc),
        failed: report.verdict == Verdict::Fails,
    })
}
