//! Subset rewrites: projections, double projections and contractions.
//!
//! Every rewrite deletes one or two coordinates of the ambient `Z^n`; the remaining
//! coordinates are relabelled downward. Each [`RewriteStep`] records the indices it
//! removed both relative to its own input (for replay) and relative to the subset the
//! rewriting started from.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::dot;
use crate::obstructions::{wu_element, wu_inequality, Inequality};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RewriteKind {
    Projection,
    DoubleProjection,
    Contraction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub kind: RewriteKind,
    /// Deleted coordinates, as indices into this step's input.
    pub coords: Vec<usize>,
    /// Removed (or, for contractions, consumed) vectors, as indices into this step's input.
    pub vectors: Vec<usize>,
    /// The same coordinates as labels of the original subset.
    pub original_coords: Vec<usize>,
    /// The same vectors as labels of the original subset.
    pub original_vectors: Vec<usize>,
    pub result: Subset,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::PreconditionFailed(msg.into())
}

fn delete_coords(v: &[i64], coords: &[usize]) -> Vec<i64> {
    v.iter().enumerate().filter(|(j, _)| !coords.contains(j)).map(|(_, &x)| x).collect()
}

/// Removes the vectors `drop` and the coordinates `coords`.
fn remove(s: &Subset, drop: &[usize], coords: &[usize]) -> Subset {
    let vectors = s
        .vectors()
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, v)| delete_coords(v, coords))
        .collect();
    Subset::new(vectors).expect("one coordinate removed per vector")
}

fn require_orthogonal(s: &Subset) -> Result<()> {
    match s.orthogonality_violation() {
        Some(why) => Err(Error::NotOrthogonal(why)),
        None => Ok(()),
    }
}

fn support(v: &[i64]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, _)| j).collect()
}

/// The coordinate deleted by projecting away vector `s`, if `V_s` is a single coordinate.
fn projection_coord(s: &Subset, idx: usize) -> Option<usize> {
    match support(s.vector(idx)).as_slice() {
        &[i] => Some(i),
        _ => None,
    }
}

/// For `i ∈ P_2 \ Q_2` whose two vectors are `±e_i ± e_j`, returns `(s, t, j)`.
fn double_projection_shape(s: &Subset, i: usize) -> Option<(usize, usize, usize)> {
    let e: Vec<usize> = (0..s.dim()).filter(|&u| s.vector(u)[i] != 0).collect();
    let &[a, b] = e.as_slice() else { return None };
    let (sa, sb) = (support(s.vector(a)), support(s.vector(b)));
    if sa.len() != 2 || sa != sb {
        return None;
    }
    if sa.iter().any(|&c| s.vector(a)[c].abs() != 1 || s.vector(b)[c].abs() != 1) {
        return None;
    }
    let j = if sa[0] == i { sa[1] } else { sa[0] };
    Some((a, b, j))
}

/// Deletes vector `idx`, supported on the single coordinate `i`, together with `i`.
pub fn project(s: &Subset, idx: usize) -> Result<Subset> {
    project_step(s, idx).map(|st| st.result)
}

fn project_step(s: &Subset, idx: usize) -> Result<RewriteStep> {
    require_orthogonal(s)?;
    if idx >= s.dim() {
        return Err(fail(format!("vector index {} out of range", idx + 1)));
    }
    let i = projection_coord(s, idx).ok_or_else(|| {
        fail(format!("|V_{}| = {}, expected 1", idx + 1, support(s.vector(idx)).len()))
    })?;
    Ok(RewriteStep {
        kind: RewriteKind::Projection,
        coords: vec![i],
        vectors: vec![idx],
        original_coords: vec![i],
        original_vectors: vec![idx],
        result: remove(s, &[idx], &[i]),
    })
}

/// Deletes the pair `e_i + e_j, e_i - e_j` (up to signs) and coordinates `i`, `j`.
pub fn double_project(s: &Subset, i: usize) -> Result<Subset> {
    double_project_step(s, i).map(|st| st.result)
}

fn double_project_step(s: &Subset, i: usize) -> Result<RewriteStep> {
    require_orthogonal(s)?;
    if i >= s.dim() {
        return Err(fail(format!("coordinate {} out of range", i + 1)));
    }
    let st = s.stats();
    if !st.p_classes[2].contains(&i) {
        return Err(fail(format!("coordinate {} is not in P_2", i + 1)));
    }
    if st.q_classes[2].contains(&i) {
        return Err(fail(format!("coordinate {} is in Q_2", i + 1)));
    }
    let (a, b, j) = double_projection_shape(s, i)
        .ok_or_else(|| fail(format!("vectors at coordinate {} are not e_i ± e_j", i + 1)))?;
    let mut coords = vec![i, j];
    coords.sort_unstable();
    Ok(RewriteStep {
        kind: RewriteKind::DoubleProjection,
        coords: coords.clone(),
        vectors: vec![a, b],
        original_coords: coords,
        original_vectors: vec![a, b],
        result: remove(s, &[a, b], &[i, j]),
    })
}

/// A rewrite available at the current state of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Candidate {
    /// Project away the given vector.
    Projection(usize),
    /// Double-project at the given coordinate.
    DoubleProjection(usize),
}

/// All applicable rewrites: projections by increasing vector index, then double
/// projections by increasing coordinate.
pub fn candidates(s: &Subset) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = (0..s.dim())
        .filter(|&u| projection_coord(s, u).is_some())
        .map(Candidate::Projection)
        .collect();
    let st = s.stats();
    out.extend(
        st.p_classes
            .get(2)
            .into_iter()
            .flatten()
            .filter(|i| !st.q_classes[2].contains(i))
            .filter(|&&i| double_projection_shape(s, i).is_some())
            .map(|&i| Candidate::DoubleProjection(i)),
    );
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub result: Subset,
    pub steps: Vec<RewriteStep>,
    /// Original labels of the vectors that survive.
    pub remaining_vectors: Vec<usize>,
    /// Original labels of the coordinates that survive.
    pub remaining_coords: Vec<usize>,
}

/// Applies projections and double projections until neither applies, projections first,
/// scanning indices in increasing order.
pub fn reduce(s: &Subset) -> Result<Reduction> {
    reduce_with(s, |_| 0)
}

/// Like [`reduce`] but `choose` picks which of the current [`candidates`] to apply.
pub fn reduce_with<F>(s: &Subset, mut choose: F) -> Result<Reduction>
where
    F: FnMut(&[Candidate]) -> usize,
{
    require_orthogonal(s)?;
    let mut cur = s.clone();
    let mut vec_labels: Vec<usize> = (0..s.dim()).collect();
    let mut coord_labels: Vec<usize> = (0..s.dim()).collect();
    let mut steps = Vec::new();
    loop {
        let cands = candidates(&cur);
        if cands.is_empty() {
            break;
        }
        let mut step = match cands[choose(&cands)] {
            Candidate::Projection(u) => project_step(&cur, u)?,
            Candidate::DoubleProjection(i) => double_project_step(&cur, i)?,
        };
        step.original_coords = step.coords.iter().map(|&c| coord_labels[c]).collect();
        step.original_vectors = step.vectors.iter().map(|&v| vec_labels[v]).collect();
        coord_labels.retain(|l| !step.original_coords.contains(l));
        vec_labels.retain(|l| !step.original_vectors.contains(l));
        cur = step.result.clone();
        steps.push(step);
    }
    Ok(Reduction {
        result: cur,
        steps,
        remaining_vectors: vec_labels,
        remaining_coords: coord_labels,
    })
}

/// Parameters of a contraction at coordinate `coord` consuming vectors `s`, `t`, `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub coord: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

/// `S' = (S \ {v_s, v_t, v_u}) ∪ {v_s + v_t, v_u - ⟨v_u, e_i⟩ e_i}` with coordinate `i`
/// deleted. `v_s + v_t` takes the slot of `v_s`, the reduced `v_u` keeps the slot of
/// `v_u`, and `v_t` is dropped.
pub fn contract(set: &Subset, c: Contraction) -> Result<Subset> {
    contract_step(set, c).map(|st| st.result)
}

pub fn contract_step(set: &Subset, c: Contraction) -> Result<RewriteStep> {
    let n = set.dim();
    let Contraction { coord: i, s, t, u } = c;
    if n < 3 {
        return Err(fail(format!("contraction needs n >= 3, got {n}")));
    }
    if [i, s, t, u].iter().any(|&x| x >= n) {
        return Err(fail("index out of range"));
    }
    if s == t || s == u || t == u {
        return Err(fail("s, t, u must be distinct"));
    }
    let (vs, vt, vu) = (set.vector(s), set.vector(t), set.vector(u));
    let mut ei: Vec<usize> = (0..n).filter(|&w| set.vector(w)[i] != 0).collect();
    let mut stu = vec![s, t, u];
    ei.sort_unstable();
    stu.sort_unstable();
    if ei != stu {
        return Err(fail(format!("E_{} != {{s, t, u}}", i + 1)));
    }
    if dot(vs, vt) != -1 {
        return Err(fail(format!("<v_s, v_t> = {}, expected -1", dot(vs, vt))));
    }
    if vs[i].abs() != 1 || vs[i] != -vt[i] {
        return Err(fail("need <v_s, e_i> = -<v_t, e_i> = ±1"));
    }
    if vu[i].abs() != 1 {
        return Err(fail("need |<v_u, e_i>| = 1"));
    }
    if dot(vu, vu) < 3 {
        return Err(fail(format!("a_u = {}, expected >= 3", dot(vu, vu))));
    }

    let merged: Vec<i64> = vs.iter().zip(vt).map(|(a, b)| a + b).collect();
    let mut reduced = vu.to_vec();
    reduced[i] = 0;
    let vectors = (0..n)
        .filter(|&w| w != t)
        .map(|w| {
            let v = if w == s {
                &merged
            } else if w == u {
                &reduced
            } else {
                set.vector(w)
            };
            delete_coords(v, &[i])
        })
        .collect();
    Ok(RewriteStep {
        kind: RewriteKind::Contraction,
        coords: vec![i],
        vectors: vec![s, t, u],
        original_coords: vec![i],
        original_vectors: vec![s, t, u],
        result: Subset::new(vectors).expect("n-1 vectors in Z^(n-1)"),
    })
}

/// The Wu inequality before and after a contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    pub contracted: Subset,
    pub before: Inequality,
    pub after: Inequality,
    /// `W - W'` with `W'` padded by a zero at the deleted coordinate; always `±e_i`.
    pub wu_difference: Vec<i128>,
}

impl ContractionReport {
    pub fn preserved(&self) -> bool {
        self.before.holds() == self.after.holds()
    }
}

pub fn contraction_report(set: &Subset, c: Contraction) -> Result<ContractionReport> {
    let contracted = contract(set, c)?;
    let w = wu_element(set).w;
    let mut w_after = wu_element(&contracted).w;
    w_after.insert(c.coord, 0);
    let wu_difference = w.iter().zip(&w_after).map(|(a, b)| a - b).collect();
    Ok(ContractionReport {
        before: wu_inequality(set),
        after: wu_inequality(&contracted),
        contracted,
        wu_difference,
    })
}

/// Whether the Wu inequality `Σ k² > 4n - 3|R_o|` has the same truth value before and
/// after the contraction.
///
/// This compares the inequality itself and does not require either subset to be
/// non-acute; when both are, it compares the Wu obstruction verdicts.
pub fn wu_preserved(set: &Subset, c: Contraction) -> Result<bool> {
    contraction_report(set, c).map(|r| r.preserved())
}

/// How an expansion builds the three contracted vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    /// Position of the new coordinate in `Z^(m+1)`.
    pub coord: usize,
    /// Vector of `S'` that becomes `v_s + v_t`.
    pub merged: usize,
    /// Vector of `S'` that becomes `v_u` once `±e_i` is added.
    pub extended: usize,
    /// Coordinates of the merged vector that go to `v_s`; the rest go to `v_t`.
    pub to_s: Vec<usize>,
    /// Sign of `⟨v_s, e_i⟩`.
    pub sign_s: i64,
    /// Sign of `⟨v_u, e_i⟩`.
    pub sign_u: i64,
}

/// Inverse of [`contract`]: builds `S ⊂ Z^(m+1)` and the contraction taking it back to
/// `contracted` exactly. `v_t` is appended as the last vector.
pub fn expand(contracted: &Subset, e: &Expansion) -> Result<(Subset, Contraction)> {
    let m = contracted.dim();
    if e.coord > m || e.merged >= m || e.extended >= m || e.merged == e.extended {
        return Err(fail("expansion indices out of range"));
    }
    if e.sign_s.abs() != 1 || e.sign_u.abs() != 1 {
        return Err(fail("expansion signs must be ±1"));
    }
    let y = contracted.vector(e.extended);
    if dot(y, y) < 2 {
        return Err(fail("extended vector needs norm >= 2"));
    }
    let lift = |v: &[i64], x: i64| {
        let mut out = v.to_vec();
        out.insert(e.coord, x);
        out
    };
    let w = contracted.vector(e.merged);
    let f: Vec<i64> =
        w.iter().enumerate().map(|(j, &x)| if e.to_s.contains(&j) { x } else { 0 }).collect();
    let g: Vec<i64> = w.iter().zip(&f).map(|(a, b)| a - b).collect();

    let mut vectors: Vec<Vec<i64>> = (0..m)
        .map(|k| {
            if k == e.merged {
                lift(&f, e.sign_s)
            } else if k == e.extended {
                lift(y, e.sign_u)
            } else {
                lift(contracted.vector(k), 0)
            }
        })
        .collect();
    vectors.push(lift(&g, -e.sign_s));
    let c = Contraction { coord: e.coord, s: e.merged, t: m, u: e.extended };
    Ok((Subset::new(vectors)?, c))
}

/// The length-three subsets `{e1 + e2, -e2 + x e3, e2 - e1}`.
pub fn length_three_family(x: i64) -> Subset {
    Subset::new(vec![vec![1, 1, 0], vec![0, -1, x], vec![-1, 1, 0]]).expect("3x3")
}
