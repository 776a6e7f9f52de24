//! Fast decision of det+ = det- for Boolean matrices.
//!
//! Three steps. If the integer determinant vanishes the answer is yes.
//! Otherwise complement the matrix into min-plus (zero entries become
//! cost 1, ones become cost 0), find a zero-cost permutation, and relabel
//! columns so that permutation is the main diagonal. Arcs at off-diagonal
//! zero-cost entries then describe alternative diagonals: a simple cycle
//! of even length composes with the chosen permutation into a zero-cost
//! diagonal of opposite parity, and conversely two zero-cost diagonals of
//! opposite parity differ by a permutation with an even cycle. So the
//! answer is yes exactly when the digraph has an even directed cycle,
//! found here by exhaustive simple-cycle search.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::int_determinant;
use crate::perm::{for_each_permutation, is_permutation};
use crate::scalar::{Extended, Scalar};
use crate::semimodule::SemiMatrix;
use crate::system::ScalarSystem;

/// Node cap for exhaustive cycle enumeration.
pub const MAX_CYCLE_NODES: usize = 12;
/// Size cap for the decision procedure.
pub const MAX_DECISION_N: usize = 10;
/// Assignment search switches from exhaustive permutations to matching
/// above this size.
const MAX_ASSIGNMENT_EXHAUSTIVE: usize = 8;

/// Directed graph on nodes `0..node_count` with no duplicate arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    node_count: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(node_count: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: BTreeSet<(usize, usize)> = arcs.into_iter().collect();
        if arcs
            .iter()
            .any(|&(u, v)| u >= node_count || v >= node_count)
        {
            return Err(Error::InvalidDigraph("arc endpoint out of range"));
        }
        Ok(Digraph { node_count, arcs })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs.contains(&(from, to))
    }

    pub fn out_neighbors(&self, from: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .range((from, 0)..=(from, usize::MAX))
            .map(|&(_, v)| v)
    }
}

/// Which evidence settled the decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The integer determinant is zero.
    SingularDeterminant,
    /// Determinant nonzero; the even-cycle search decided.
    CycleSearch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual,
}

/// Full evidence trail of one decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTrace {
    pub branch: Branch,
    pub int_determinant: BigInt,
    /// The complement matrix over min-plus.
    pub complement: SemiMatrix,
    /// Zero-cost permutation of the complement (cycle branch only).
    pub sigma: Option<Vec<usize>>,
    pub digraph: Option<Digraph>,
    /// An even directed cycle, when one exists.
    pub cycle: Option<Vec<usize>>,
    pub verdict: Verdict,
}

/// Complement a Boolean matrix into min-plus: entry 1 where the input is
/// 0 and 0 where it is 1. Unit-weight diagonals of the input correspond
/// exactly to zero-cost diagonals of the complement.
pub fn complement_matrix(a: &SemiMatrix) -> Result<SemiMatrix> {
    if !a.system().is_boolean() {
        return Err(Error::NotBoolean);
    }
    let minplus = Arc::new(ScalarSystem::min_plus());
    let entries = (0..a.rows())
        .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
        .map(|(i, j)| {
            if a.entry(i, j) == &Scalar::Bit(true) {
                Scalar::min_plus(0, 1)
            } else {
                Scalar::min_plus(1, 1)
            }
        })
        .collect();
    SemiMatrix::new(minplus, a.rows(), a.cols(), entries)
}

fn minplus_entry(a: &SemiMatrix, i: usize, j: usize) -> Result<&Extended> {
    match a.entry(i, j) {
        Scalar::MinPlus(v) => Ok(v),
        _ => Err(Error::UnsupportedSystem("min-plus matrix required")),
    }
}

fn is_cost_zero(v: &Extended) -> bool {
    matches!(v, Extended::Finite(r) if r.is_zero())
}

/// Kuhn's augmenting-path matching on the zero-cost entries: `rows_to_col`
/// tries to give every row in `rows` a distinct zero column.
fn zero_matching(zero: &[Vec<bool>], skip_row: usize, fixed_cols: &[bool]) -> bool {
    let n = zero.len();
    let mut col_owner = alloc::vec![usize::MAX; n];
    fn try_assign(
        r: usize,
        zero: &[Vec<bool>],
        banned: &[bool],
        col_owner: &mut [usize],
        visited: &mut [bool],
    ) -> bool {
        for c in 0..zero.len() {
            if !zero[r][c] || banned[c] || visited[c] {
                continue;
            }
            visited[c] = true;
            if col_owner[c] == usize::MAX
                || try_assign(col_owner[c], zero, banned, col_owner, visited)
            {
                col_owner[c] = r;
                return true;
            }
        }
        false
    }
    for r in skip_row..n {
        let mut visited = alloc::vec![false; n];
        if !try_assign(r, zero, fixed_cols, &mut col_owner, &mut visited) {
            return false;
        }
    }
    true
}

/// A permutation whose generalized diagonal in the min-plus matrix costs
/// exactly zero, or `None` when every permutation has positive cost.
/// Entries must be nonnegative (or infinite); ties are broken toward the
/// lexicographically least permutation.
///
/// Up to 8x8 the permutations are searched exhaustively; above that, a
/// zero-cost permutation is a perfect matching on the zero entries and is
/// built greedily column-by-column with a matching feasibility check.
pub fn zero_weight_permutation(ac: &SemiMatrix) -> Result<Option<Vec<usize>>> {
    let n = ac.require_square()?;
    let mut zero = alloc::vec![alloc::vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = minplus_entry(ac, i, j)?;
            if let Extended::Finite(r) = v {
                if r.is_negative() {
                    return Err(Error::Hypothesis(
                        "zero-weight search needs nonnegative costs",
                    ));
                }
            }
            zero[i][j] = is_cost_zero(v);
        }
    }

    if n <= MAX_ASSIGNMENT_EXHAUSTIVE {
        let mut found = None;
        for_each_permutation(n, |sigma, _| {
            if sigma.iter().enumerate().all(|(i, &j)| zero[i][j]) {
                found = Some(sigma.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        return Ok(found);
    }

    if !zero_matching(&zero, 0, &alloc::vec![false; n]) {
        return Ok(None);
    }
    // Fix columns greedily in ascending order, keeping the rest matchable.
    let mut sigma = alloc::vec![usize::MAX; n];
    let mut taken = alloc::vec![false; n];
    for r in 0..n {
        let mut placed = false;
        for c in 0..n {
            if !zero[r][c] || taken[c] {
                continue;
            }
            taken[c] = true;
            if zero_matching(&zero, r + 1, &taken) {
                sigma[r] = c;
                placed = true;
                break;
            }
            taken[c] = false;
        }
        if !placed {
            return Err(Error::Internal("greedy assignment after feasibility check"));
        }
    }
    Ok(Some(sigma))
}

fn sigma_cost_is_zero(ac: &SemiMatrix, sigma: &[usize]) -> Result<bool> {
    for (i, &j) in sigma.iter().enumerate() {
        if !is_cost_zero(minplus_entry(ac, i, j)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relabels columns so the zero-cost permutation `sigma` becomes the main
/// diagonal, then places an arc `(i, j)` for every off-diagonal zero-cost
/// entry of the relabeled matrix. Simple cycles of this digraph compose
/// with `sigma` into further zero-cost diagonals; even-length cycles flip
/// the parity.
pub fn build_reduction_digraph(ac: &SemiMatrix, sigma: &[usize]) -> Result<Digraph> {
    let n = ac.require_square()?;
    if sigma.len() != n || !is_permutation(sigma) {
        return Err(Error::Hypothesis("sigma is not a permutation of the columns"));
    }
    if !sigma_cost_is_zero(ac, sigma)? {
        return Err(Error::Hypothesis("sigma is not zero-cost"));
    }
    let mut arcs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && is_cost_zero(minplus_entry(ac, i, sigma[j])?) {
                arcs.insert((i, j));
            }
        }
    }
    Digraph::new(n, arcs)
}

/// A simple directed cycle of even length, or `None`. Exhaustive
/// depth-first enumeration, canonicalized by starting each cycle at its
/// smallest node and exploring neighbors in ascending order; the first
/// even cycle in that order is returned.
pub fn has_even_cycle(g: &Digraph) -> Result<Option<Vec<usize>>> {
    if g.node_count() > MAX_CYCLE_NODES {
        return Err(Error::SizeCap {
            what: "cycle enumeration",
            limit: MAX_CYCLE_NODES,
            found: g.node_count(),
        });
    }
    fn dfs(
        g: &Digraph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
    ) -> Option<Vec<usize>> {
        let here = *path.last().expect("path holds at least the start");
        for next in g.out_neighbors(here) {
            if next == start && path.len() % 2 == 0 {
                return Some(path.clone());
            }
            if next > start && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                if let Some(cycle) = dfs(g, start, path, on_path) {
                    return Some(cycle);
                }
                on_path[next] = false;
                path.pop();
            }
        }
        None
    }
    for start in 0..g.node_count() {
        let mut on_path = alloc::vec![false; g.node_count()];
        on_path[start] = true;
        let mut path = alloc::vec![start];
        if let Some(cycle) = dfs(g, start, &mut path, &mut on_path) {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

/// Decides whether det+ = det- for a Boolean matrix without expanding the
/// bideterminant. Step 1: if the integer determinant is zero, they are
/// equal. Step 2: otherwise some diagonal is all ones, so the complement
/// has a zero-cost permutation; they are equal iff the reduction digraph
/// has an even cycle. The returned trace records all evidence.
pub fn decide_bidet_equal(a: &SemiMatrix) -> Result<DecisionTrace> {
    decide_bidet_equal_with_cap(a, MAX_DECISION_N)
}

/// [`decide_bidet_equal`] with an explicit size cap (never above the
/// built-in limit).
pub fn decide_bidet_equal_with_cap(a: &SemiMatrix, cap: usize) -> Result<DecisionTrace> {
    if !a.system().is_boolean() {
        return Err(Error::NotBoolean);
    }
    let n = a.require_square()?;
    let limit = cap.min(MAX_DECISION_N);
    if n > limit {
        return Err(Error::SizeCap {
            what: "bideterminant decision",
            limit,
            found: n,
        });
    }
    let ints: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if a.entry(i, j) == &Scalar::Bit(true) {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let det = int_determinant(&ints)?;
    let complement = complement_matrix(a)?;

    if det.is_zero() {
        return Ok(DecisionTrace {
            branch: Branch::SingularDeterminant,
            int_determinant: det,
            complement,
            sigma: None,
            digraph: None,
            cycle: None,
            verdict: Verdict::Equal,
        });
    }

    let sigma = zero_weight_permutation(&complement)?.ok_or(Error::Internal(
        "nonzero determinant guarantees a unit diagonal",
    ))?;
    let digraph = build_reduction_digraph(&complement, &sigma)?;
    let cycle = has_even_cycle(&digraph)?;
    let verdict = if cycle.is_some() {
        Verdict::Equal
    } else {
        Verdict::NotEqual
    };
    Ok(DecisionTrace {
        branch: Branch::CycleSearch,
        int_determinant: det,
        complement,
        sigma: Some(sigma),
        digraph: Some(digraph),
        cycle,
        verdict,
    })
}
