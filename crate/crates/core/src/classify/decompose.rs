use serde::Serialize;

use crate::lattice::{dot, BasisMatrix};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BlockKind {
    /// `±e_i`
    Unit,
    /// `±2e_i`
    TwoTimes,
    /// A signed permutation of `{e_i + e_j, e_i - e_j}`.
    Hyper2x2,
    Other,
}

impl BlockKind {
    pub fn is_cubiquitous_form(self) -> bool {
        !matches!(self, BlockKind::Other)
    }
}

/// A connected component of the bipartite support graph between vectors and coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub coords: Vec<usize>,
    pub vectors: Vec<usize>,
    pub kind: BlockKind,
}

impl Block {
    /// The block's vectors restricted to its coordinates, as a basis. `None` when the
    /// block is not square or its vectors are dependent.
    pub fn basis(&self, s: &Subset) -> Option<BasisMatrix> {
        if self.coords.len() != self.vectors.len() {
            return None;
        }
        let cols: Vec<Vec<i64>> = self
            .vectors
            .iter()
            .map(|&v| self.coords.iter().map(|&c| s.vector(v)[c]).collect())
            .collect();
        BasisMatrix::from_columns(&cols).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn kinds(&self) -> Vec<BlockKind> {
        self.blocks.iter().map(|b| b.kind).collect()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Finest splitting of a subset into support-disjoint blocks, ordered by their smallest
/// coordinate (blocks without coordinates, i.e. zero vectors, come last).
pub fn decompose(s: &Subset) -> BlockDecomposition {
    let n = s.dim();
    // nodes 0..n are vectors, n..2n are coordinates
    let mut parent: Vec<usize> = (0..2 * n).collect();
    for (v, vec) in s.vectors().iter().enumerate() {
        for (c, &x) in vec.iter().enumerate() {
            if x != 0 {
                let (a, b) = (find(&mut parent, v), find(&mut parent, n + c));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }

    let mut groups: Vec<(usize, Block)> = Vec::new();
    for node in 0..2 * n {
        let root = find(&mut parent, node);
        let slot = match groups.iter().position(|(r, _)| *r == root) {
            Some(p) => p,
            None => {
                let empty = Block { coords: vec![], vectors: vec![], kind: BlockKind::Other };
                groups.push((root, empty));
                groups.len() - 1
            }
        };
        let block = &mut groups[slot].1;
        if node < n {
            block.vectors.push(node);
        } else {
            block.coords.push(node - n);
        }
    }

    let mut blocks: Vec<Block> = groups.into_iter().map(|(_, b)| b).collect();
    for b in &mut blocks {
        b.kind = classify_block(s, b);
    }
    blocks.sort_by_key(|b| b.coords.first().copied().unwrap_or(usize::MAX));
    BlockDecomposition { blocks }
}

fn classify_block(s: &Subset, b: &Block) -> BlockKind {
    match (b.vectors.as_slice(), b.coords.as_slice()) {
        (&[v], &[c]) => match s.vector(v)[c].abs() {
            1 => BlockKind::Unit,
            2 => BlockKind::TwoTimes,
            _ => BlockKind::Other,
        },
        (&[v, w], &[c, d]) => {
            let (x, y) = (s.vector(v), s.vector(w));
            // After negating so the first entry is positive, any orthogonal pair of ±1
            // vectors in two coordinates is (1, 1), (1, -1).
            let unit_entries = [x[c], x[d], y[c], y[d]].iter().all(|e| e.abs() == 1);
            if unit_entries && dot(x, y) == 0 {
                BlockKind::Hyper2x2
            } else {
                BlockKind::Other
            }
        }
        _ => BlockKind::Other,
    }
}
