//! One function per subcommand. Every function writes its report to `out` and returns the
//! process exit code. Indices are 1-based in all output and arguments.

use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use cubiq_core::classify::{
    catalog_blocks, classify_orthogonal, det4_formula, det4_zero_solutions, BlockKind,
    DEFAULT_SOLUTION_BOUND, EMPTY_CUBE_BASE,
};
use cubiq_core::lattice::format::format_matrix;
use cubiq_core::obstructions::{
    self, cube_lattice_points, hajos_basis, wu_element, wu_obstruction, wu_obstruction_orthogonal,
    Inequality,
};
use cubiq_core::transforms::{contract_step, contraction_report, reduce as reduce_subset, Contraction, RewriteKind};
use cubiq_core::{BasisMatrix, Error, Limits, SquareMatrix, Status, Subset, Verdict};

use crate::exit::{self, for_status, Failure};
use crate::{CatalogChoice, Format};

type Outcome = Result<u8, Failure>;

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

fn big(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::String(v.to_string()),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| Failure::input(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// Text reports: `key: value` lines, turned into `#` comments when a matrix follows so the
/// whole output re-parses as that matrix.
struct Text<'a> {
    out: &'a mut dyn Write,
    lines: Vec<String>,
}

impl<'a> Text<'a> {
    fn new(out: &'a mut dyn Write) -> Self {
        Text { out, lines: Vec::new() }
    }

    fn line(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        let value = value.to_string();
        let sep = if value.is_empty() { "" } else { " " };
        self.lines.push(format!("{key}:{sep}{value}"));
        self
    }

    fn finish(&mut self, matrix: Option<&SquareMatrix<i64>>) -> Result<(), Failure> {
        let prefix = if matrix.is_some() { "# " } else { "" };
        for l in &self.lines {
            writeln!(self.out, "{prefix}{l}")?;
        }
        if let Some(m) = matrix {
            write!(self.out, "{}", format_matrix(m))?;
        }
        Ok(())
    }
}

fn verdict_text(out: &mut dyn Write, v: &Verdict) -> Result<(), Failure> {
    let mut t = Text::new(out);
    t.line("status", format!("{:?}", v.status));
    if let Some(w) = &v.witness {
        t.line("witness", join(w));
    }
    if let Some(ineq) = &v.inequality {
        t.line("lhs", &ineq.lhs).line("rhs", &ineq.rhs);
    }
    t.finish(v.hajos_basis.as_ref())
}

fn emit_verdict(out: &mut dyn Write, v: &Verdict, fmt: Format) -> Outcome {
    match fmt {
        Format::Json => emit_json(out, v)?,
        Format::Text => verdict_text(out, v)?,
    }
    Ok(for_status(v.status))
}

pub fn check(m: SquareMatrix<i64>, limits: Limits, fmt: Format, out: &mut dyn Write) -> Outcome {
    let b = BasisMatrix::new(m)?;
    let v = obstructions::check(&b, limits)?;
    emit_verdict(out, &v, fmt)
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct WuReport {
    W: Vec<i128>,
    R_o: Vec<usize>,
    #[serde(flatten)]
    inequality: Inequality,
    status: Status,
}

pub fn wu(m: SquareMatrix<i64>, orthogonal: bool, fmt: Format, out: &mut dyn Write) -> Outcome {
    let s = Subset::from_matrix(&m);
    let v = if orthogonal { wu_obstruction_orthogonal(&s)? } else { wu_obstruction(&s)? };
    let data = wu_element(&s);
    let report = WuReport {
        W: data.w,
        R_o: one_based(&data.odd),
        inequality: v.inequality.clone().expect("wu verdicts carry their inequality"),
        status: v.status,
    };
    match fmt {
        Format::Json => emit_json(out, &report)?,
        Format::Text => Text::new(out)
            .line("W", join(&report.W))
            .line("R_o", join(&report.R_o))
            .line("lhs", &report.inequality.lhs)
            .line("rhs", &report.inequality.rhs)
            .line("status", format!("{:?}", report.status))
            .finish(None)?,
    }
    Ok(for_status(v.status))
}

#[derive(Serialize)]
struct IdentityReport {
    lhs: i128,
    rhs: i128,
    p0: i128,
    holds: bool,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct StatsReport {
    n: usize,
    E: Vec<Vec<usize>>,
    V: Vec<Vec<usize>>,
    p: Vec<usize>,
    P: Vec<Vec<usize>>,
    Q: Vec<Vec<usize>>,
    norms: Vec<i128>,
    I: i128,
    identity: IdentityReport,
}

pub fn stats(m: SquareMatrix<i64>, fmt: Format, out: &mut dyn Write) -> Outcome {
    let st = Subset::from_matrix(&m).stats();
    let id = st.identity();
    let lists = |xs: &[Vec<usize>]| xs.iter().map(|x| one_based(x)).collect::<Vec<_>>();
    let report = StatsReport {
        n: st.dim(),
        E: lists(&st.e),
        V: lists(&st.v),
        p: st.p_counts(),
        P: lists(&st.p_classes),
        Q: lists(&st.q_classes),
        norms: st.norms.clone(),
        I: st.excess,
        identity: IdentityReport { lhs: id.lhs, rhs: id.rhs, p0: id.zero_coordinates, holds: id.holds() },
    };
    match fmt {
        Format::Json => emit_json(out, &report)?,
        Format::Text => Text::new(out)
            .line("n", report.n)
            .line("p", join(&report.p))
            .line("norms", join(&report.norms))
            .line("I", report.I)
            .line("identity", format!("{} + 3*{} = {}", id.lhs, id.zero_coordinates, id.rhs))
            .line("holds", id.holds())
            .finish(None)?,
    }
    Ok(exit::POSITIVE)
}

#[derive(Serialize)]
struct HajosReport {
    found: bool,
    det: Value,
    basis: Option<SquareMatrix<i64>>,
    row_order: Option<Vec<usize>>,
}

pub fn hajos(m: SquareMatrix<i64>, limits: Limits, fmt: Format, out: &mut dyn Write) -> Outcome {
    let b = BasisMatrix::new(m)?;
    let found = hajos_basis(&b, limits.permutation_cap)?;
    let report = HajosReport {
        found: found.is_some(),
        det: big(&b.det()),
        basis: found.as_ref().map(|h| h.basis.clone()),
        row_order: found.as_ref().map(|h| one_based(&h.row_order)),
    };
    match fmt {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            let mut t = Text::new(out);
            t.line("found", report.found).line("det", b.det());
            if let Some(order) = &report.row_order {
                t.line("row_order", join(order));
            }
            t.finish(report.basis.as_ref())?;
        }
    }
    Ok(if report.found { exit::POSITIVE } else { exit::NEGATIVE })
}

#[derive(Serialize)]
struct BlockReport {
    kind: BlockKind,
    coords: Vec<usize>,
    vectors: Vec<usize>,
}

#[derive(Serialize)]
struct ClassifyReport {
    blocks: Vec<BlockReport>,
    offending_block: Option<usize>,
    verdict: Verdict,
}

pub fn classify(m: SquareMatrix<i64>, limits: Limits, fmt: Format, out: &mut dyn Write) -> Outcome {
    let c = classify_orthogonal(&Subset::from_matrix(&m), limits)?;
    let report = ClassifyReport {
        blocks: c
            .decomposition
            .blocks
            .iter()
            .map(|b| BlockReport { kind: b.kind, coords: one_based(&b.coords), vectors: one_based(&b.vectors) })
            .collect(),
        offending_block: c.offending_block.map(|i| i + 1),
        verdict: c.verdict,
    };
    match fmt {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            let mut t = Text::new(out);
            for (k, b) in report.blocks.iter().enumerate() {
                t.line(
                    &format!("block {}", k + 1),
                    format!("{:?} coords {} vectors {}", b.kind, join(&b.coords), join(&b.vectors)),
                );
            }
            t.line("status", format!("{:?}", report.verdict.status));
            if let Some(w) = &report.verdict.witness {
                t.line("witness", join(w));
            }
            t.finish(None)?;
        }
    }
    Ok(for_status(report.verdict.status))
}

pub fn torus(ks: &[i64], fmt: Format, out: &mut dyn Write) -> Outcome {
    let bounds = cubiq_core::classify::torus_sum_bounds_qball(ks).map_err(|e| match e {
        Error::ZeroParameter(p) => Failure::input(format!("torus parameter {} is zero", p + 1)),
        e => e.into(),
    })?;
    match fmt {
        Format::Json => emit_json(out, &serde_json::json!({ "bounds": bounds }))?,
        Format::Text => writeln!(out, "bounds: {bounds}")?,
    }
    Ok(if bounds { exit::POSITIVE } else { exit::NEGATIVE })
}

#[derive(Serialize)]
struct StepReport {
    step: usize,
    kind: RewriteKind,
    coords: Vec<usize>,
    vectors: Vec<usize>,
    result: SquareMatrix<i64>,
}

#[derive(Serialize)]
struct ReductionSummary {
    done: bool,
    remaining_vectors: Vec<usize>,
    remaining_coords: Vec<usize>,
    result: SquareMatrix<i64>,
}

pub fn reduce(m: SquareMatrix<i64>, fmt: Format, out: &mut dyn Write) -> Outcome {
    let r = reduce_subset(&Subset::from_matrix(&m))?;
    let steps: Vec<StepReport> = r
        .steps
        .iter()
        .enumerate()
        .map(|(k, st)| StepReport {
            step: k + 1,
            kind: st.kind,
            coords: one_based(&st.original_coords),
            vectors: one_based(&st.original_vectors),
            result: st.result.to_matrix(),
        })
        .collect();
    let summary = ReductionSummary {
        done: true,
        remaining_vectors: one_based(&r.remaining_vectors),
        remaining_coords: one_based(&r.remaining_coords),
        result: r.result.to_matrix(),
    };
    match fmt {
        Format::Json => {
            for st in &steps {
                emit_json(out, st)?;
            }
            emit_json(out, &summary)?;
        }
        Format::Text => {
            let mut t = Text::new(out);
            for st in &steps {
                t.line(
                    &format!("step {}", st.step),
                    format!("{:?} coords {} vectors {}", st.kind, join(&st.coords), join(&st.vectors)),
                );
            }
            t.line("remaining_vectors", join(&summary.remaining_vectors))
                .line("remaining_coords", join(&summary.remaining_coords))
                .finish(Some(&summary.result))?;
        }
    }
    Ok(exit::POSITIVE)
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct ContractionSummary {
    W_difference: Vec<i128>,
    wu_before: Inequality,
    wu_after: Inequality,
    preserved: bool,
}

pub fn contract(m: SquareMatrix<i64>, idx: [usize; 4], fmt: Format, out: &mut dyn Write) -> Outcome {
    if idx.contains(&0) {
        return Err(Failure::usage("contraction indices are 1-based"));
    }
    let [coord, s, t, u] = idx.map(|i| i - 1);
    let set = Subset::from_matrix(&m);
    let c = Contraction { coord, s, t, u };
    let step = contract_step(&set, c)?;
    let report = contraction_report(&set, c)?;
    let line = StepReport {
        step: 1,
        kind: step.kind,
        coords: one_based(&step.coords),
        vectors: one_based(&step.vectors),
        result: step.result.to_matrix(),
    };
    let summary = ContractionSummary {
        W_difference: report.wu_difference.clone(),
        preserved: report.preserved(),
        wu_before: report.before,
        wu_after: report.after,
    };
    match fmt {
        Format::Json => {
            emit_json(out, &line)?;
            emit_json(out, &summary)?;
        }
        Format::Text => Text::new(out)
            .line("W_difference", join(&summary.W_difference))
            .line("wu_before", format!("{} > {}", summary.wu_before.lhs, summary.wu_before.rhs))
            .line("wu_after", format!("{} > {}", summary.wu_after.lhs, summary.wu_after.rhs))
            .line("preserved", summary.preserved)
            .finish(Some(&line.result))?,
    }
    Ok(exit::POSITIVE)
}

pub fn det4(values: &[i64], bound: Option<i64>, fmt: Format, out: &mut dyn Write) -> Outcome {
    if let &[a, b, c, d] = values {
        let v = det4_formula(a, b, c, d);
        match fmt {
            Format::Json => emit_json(out, &serde_json::json!({ "det": v }))?,
            Format::Text => writeln!(out, "{v}")?,
        }
        return Ok(exit::POSITIVE);
    }
    let sols = det4_zero_solutions(bound.unwrap_or(DEFAULT_SOLUTION_BOUND));
    match fmt {
        Format::Json => emit_json(out, &sols)?,
        Format::Text => {
            writeln!(out, "a,b,c,d")?;
            for s in &sols {
                writeln!(out, "{},{},{},{}", s[0], s[1], s[2], s[3])?;
            }
        }
    }
    Ok(exit::POSITIVE)
}

#[derive(Serialize)]
struct CatalogReport {
    name: &'static str,
    det: Value,
    basis: SquareMatrix<i64>,
    empty_cube_base: [i64; 8],
    lattice_points_in_cube: usize,
}

pub fn catalog(choice: Option<CatalogChoice>, fmt: Format, out: &mut dyn Write) -> Outcome {
    let (first, second) = catalog_blocks();
    let blocks = match choice {
        None => vec![first, second],
        Some(CatalogChoice::First) => vec![first],
        Some(CatalogChoice::Second) => vec![second],
    };
    let mut reports = Vec::new();
    for b in blocks {
        reports.push(CatalogReport {
            name: b.name,
            det: big(&b.basis.det()),
            lattice_points_in_cube: cube_lattice_points(&b.basis, &EMPTY_CUBE_BASE)?.len(),
            basis: b.basis.into_matrix(),
            empty_cube_base: EMPTY_CUBE_BASE,
        });
    }
    match fmt {
        Format::Json => emit_json(out, &reports)?,
        Format::Text => {
            for r in &reports {
                Text::new(out)
                    .line("name", r.name)
                    .line("det", &r.det)
                    .line("empty_cube_base", join(&r.empty_cube_base))
                    .line("lattice_points_in_cube", r.lattice_points_in_cube)
                    .finish(Some(&r.basis))?;
            }
        }
    }
    Ok(exit::POSITIVE)
}
