//! Exhaustive small-n enumeration used as ground truth.
//!
//! Nothing here touches tableaux, lattice walks, or closed forms: diagrams are
//! produced directly from set partitions or from perfect matchings on an
//! inflated ground set, and the crossing number is found by subset search.

use num_bigint::BigUint;
use thiserror::Error;

use crate::diagram::{DiagramClass, InflatedMatching, Label, TangledDiagram, Vertex};

pub const MAX_PARTITION_N: Vertex = 12;
pub const MAX_MATCHING_POINTS: Vertex = 14;
pub const MAX_TANGLED_N: Vertex = 7;
pub const MAX_BRAID_N: Vertex = 10;
pub const MAX_CROSSING_ARCS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {got} exceeds the enumeration limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("perfect matchings need an even ground set, got {0}")]
    OddGroundSet(Vertex),
    #[error("invalid class spec: {0}")]
    BadSpec(String),
}

fn guard(what: &'static str, got: usize, limit: usize) -> Result<(), OracleError> {
    if got > limit {
        Err(OracleError::TooLarge { what, got, limit })
    } else {
        Ok(())
    }
}

/// What to count: a class over `[n]`, optionally with exactly `ell` degree-2
/// vertices and optionally `k`-noncrossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    pub class: DiagramClass,
    pub n: Vertex,
    pub ell: Option<usize>,
    pub k: Option<usize>,
}

impl ClassSpec {
    pub fn new(class: DiagramClass, n: Vertex) -> Self {
        ClassSpec {
            class,
            n,
            ell: None,
            k: None,
        }
    }

    pub fn ell(mut self, ell: usize) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn validate(&self) -> Result<(), OracleError> {
        if let Some(k) = self.k {
            if k < 2 {
                return Err(OracleError::BadSpec(format!("k = {k} must be at least 2")));
            }
        }
        Ok(())
    }

    fn admits(&self, d: &TangledDiagram) -> bool {
        d.belongs_to(self.class)
            && self.ell.is_none_or(|ell| d.degree_two_count() == ell)
            && self.k.is_none_or(|k| {
                crossing_number(&d.inflate()).expect("within enumeration limits") < k
            })
    }
}

/// Set partitions of `[n]` in restricted-growth order, each drawn with its
/// consecutive block elements joined by arcs.
pub struct SetPartitions {
    n: usize,
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = TangledDiagram;

    fn next(&mut self) -> Option<TangledDiagram> {
        if self.done {
            return None;
        }
        let mut last_in_block: Vec<Option<Vertex>> = vec![None; self.n];
        let mut arcs = Vec::new();
        for (pos, &block) in self.rgs.iter().enumerate() {
            let v = pos as Vertex + 1;
            if let Some(prev) = last_in_block[block] {
                arcs.push((prev, v));
            }
            last_in_block[block] = Some(v);
        }
        let diagram = TangledDiagram::new(self.n as Vertex, arcs, []).expect("partition arcs are valid");

        // advance the restricted growth string
        self.done = true;
        for i in (1..self.n).rev() {
            let bound = self.rgs[..i].iter().max().copied().unwrap_or(0) + 1;
            if self.rgs[i] < bound {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                self.done = false;
                break;
            }
        }
        Some(diagram)
    }
}

pub fn enum_partitions(n: Vertex) -> Result<SetPartitions, OracleError> {
    guard("n", n as usize, MAX_PARTITION_N as usize)?;
    Ok(SetPartitions {
        n: n as usize,
        rgs: vec![0; n as usize],
        done: n == 0,
    })
}

/// Calls `visit` with every perfect matching of `items`, pairing the first
/// free item with each later one in turn.
pub fn for_each_perfect_matching<T: Copy>(items: &[T], mut visit: impl FnMut(&[(T, T)])) {
    fn recurse<T: Copy>(free: &mut Vec<T>, pairs: &mut Vec<(T, T)>, visit: &mut dyn FnMut(&[(T, T)])) {
        if free.is_empty() {
            visit(pairs);
            return;
        }
        let first = free.remove(0);
        for idx in 0..free.len() {
            let partner = free.remove(idx);
            pairs.push((first, partner));
            recurse(free, pairs, visit);
            pairs.pop();
            free.insert(idx, partner);
        }
        free.insert(0, first);
    }
    if items.len() % 2 == 1 {
        return;
    }
    recurse(&mut items.to_vec(), &mut Vec::new(), &mut visit);
}

/// All `(points - 1)!!` perfect matchings on `1..=points`.
pub fn enum_perfect_matchings(points: Vertex) -> Result<Vec<InflatedMatching>, OracleError> {
    if points % 2 == 1 {
        return Err(OracleError::OddGroundSet(points));
    }
    guard("points", points as usize, MAX_MATCHING_POINTS as usize)?;
    let labels: Vec<Vertex> = (1..=points).collect();
    let mut out = Vec::new();
    for_each_perfect_matching(&labels, |pairs| {
        out.push(InflatedMatching::on_points(points, pairs.iter().copied()).expect("perfect matching"));
    });
    Ok(out)
}

/// Visits every tangled diagram over `[n]`, optionally only those with
/// exactly `ell` degree-2 vertices. Each vertex is declared isolated, of
/// degree one, or of degree two; every perfect matching of the resulting
/// inflated ground set is then deflated.
pub fn for_each_tangled(
    n: Vertex,
    ell: Option<usize>,
    mut visit: impl FnMut(TangledDiagram),
) -> Result<(), OracleError> {
    guard("n", n as usize, MAX_TANGLED_N as usize)?;
    let mut degrees = vec![0u8; n as usize];
    loop {
        let twos = degrees.iter().filter(|&&d| d == 2).count();
        if ell.is_none_or(|ell| ell == twos) {
            let mut ground = Vec::new();
            let mut primed = Vec::new();
            for (idx, &deg) in degrees.iter().enumerate() {
                let v = idx as Vertex + 1;
                if deg >= 1 {
                    ground.push(Label::plain(v));
                }
                if deg == 2 {
                    ground.push(Label::primed(v));
                    primed.push(v);
                }
            }
            for_each_perfect_matching(&ground, |pairs| {
                let m = InflatedMatching::new(n, primed.iter().copied(), pairs.iter().copied())
                    .expect("perfect matching on the inflated ground set");
                visit(m.deflate().expect("every perfect matching deflates"));
            });
        }
        // next degree assignment in base 3
        let mut pos = 0;
        loop {
            if pos == degrees.len() {
                return Ok(());
            }
            degrees[pos] += 1;
            if degrees[pos] == 3 {
                degrees[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
    }
}

pub fn enum_tangled(n: Vertex, ell: Option<usize>) -> Result<Vec<TangledDiagram>, OracleError> {
    let mut out = Vec::new();
    for_each_tangled(n, ell, |d| out.push(d))?;
    Ok(out)
}

/// Braids without isolated points: choose the loop vertices, then split the
/// rest into chains of length at least two whose interior vertices cross.
pub fn enum_braids(n: Vertex) -> Result<Vec<TangledDiagram>, OracleError> {
    guard("n", n as usize, MAX_BRAID_N as usize)?;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let loops: Vec<Vertex> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let rest: Vec<Vertex> = (1..=n).filter(|v| mask & (1 << (v - 1)) == 0).collect();
        for_each_set_partition(&rest, |blocks| {
            if blocks.iter().any(|b| b.len() < 2) {
                return;
            }
            let mut arcs: Vec<(Vertex, Vertex)> = loops.iter().map(|&v| (v, v)).collect();
            let mut crossed = Vec::new();
            for block in blocks {
                arcs.extend(block.windows(2).map(|w| (w[0], w[1])));
                crossed.extend_from_slice(&block[1..block.len() - 1]);
            }
            out.push(TangledDiagram::new(n, arcs, crossed).expect("braid arcs are valid"));
        });
    }
    Ok(out)
}

fn for_each_set_partition(items: &[Vertex], mut visit: impl FnMut(&[Vec<Vertex>])) {
    fn recurse(items: &[Vertex], blocks: &mut Vec<Vec<Vertex>>, visit: &mut dyn FnMut(&[Vec<Vertex>])) {
        let Some((&first, rest)) = items.split_first() else {
            visit(blocks);
            return;
        };
        for b in 0..blocks.len() {
            blocks[b].push(first);
            recurse(rest, blocks, visit);
            blocks[b].pop();
        }
        blocks.push(vec![first]);
        recurse(rest, blocks, visit);
        blocks.pop();
    }
    recurse(items, &mut Vec::new(), &mut visit);
}

/// Largest `k` with arcs `(i_1, j_1), ..., (i_k, j_k)` such that
/// `i_1 < ... < i_k < j_1 < ... < j_k`, by exhaustive search.
pub fn crossing_number(m: &InflatedMatching) -> Result<usize, OracleError> {
    guard("arcs", m.arcs().len(), MAX_CROSSING_ARCS)?;
    let arcs = m.arcs();
    // arcs are sorted by left end, so any mutually crossing set appears as an
    // increasing subsequence
    fn extend(arcs: &[(Label, Label)], chain: &mut Vec<usize>, start: usize, best: &mut usize) {
        *best = (*best).max(chain.len());
        if chain.len() + (arcs.len() - start) <= *best {
            return;
        }
        for idx in start..arcs.len() {
            let (i, j) = arcs[idx];
            let fits = chain.iter().all(|&c| {
                let (ci, cj) = arcs[c];
                ci < i && i < cj && cj < j
            });
            if fits {
                chain.push(idx);
                extend(arcs, chain, idx + 1, best);
                chain.pop();
            }
        }
    }
    let mut best = 0;
    extend(arcs, &mut Vec::new(), 0, &mut best);
    Ok(best)
}

/// Exact cardinality of a class by enumeration and filtering.
pub fn oracle_count(spec: ClassSpec) -> Result<BigUint, OracleError> {
    spec.validate()?;
    let mut count = 0u64;
    match spec.class {
        DiagramClass::Partition | DiagramClass::TwoRegularPartition | DiagramClass::MatchingWithIsolated => {
            for d in enum_partitions(spec.n)? {
                if spec.admits(&d) {
                    count += 1;
                }
            }
        }
        DiagramClass::BraidNoIsolated => {
            count = enum_braids(spec.n)?.iter().filter(|d| spec.admits(d)).count() as u64;
        }
        DiagramClass::General => {
            for_each_tangled(spec.n, spec.ell, |d| {
                if spec.admits(&d) {
                    count += 1;
                }
            })?;
        }
    }
    Ok(BigUint::from(count))
}
