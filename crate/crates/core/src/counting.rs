//! Exact counts: closed forms, shape dynamic programming, and lattice walks
//! in the quadrant. Everything is arbitrary precision.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bijections::{Shape, ShapeStep, VacillatingTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("walk length {0} is odd")]
    OddLength(usize),
    #[error("sum {sum} is not divisible by {divisor}")]
    InexactDivision { sum: BigInt, divisor: BigInt },
    #[error("noncrossing bound k = {0} must be at least 2")]
    BadK(usize),
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

pub fn catalan(m: u64) -> BigUint {
    binomial(2 * m as i64, m as i64) / BigUint::from(m + 1)
}

/// Number of 3-noncrossing perfect matchings on `points` points:
/// `C_m C_{m+2} - C_{m+1}^2` for `points = 2m`, zero for odd `points`.
pub fn f3_closed(points: u64) -> BigUint {
    if points % 2 == 1 {
        return BigUint::zero();
    }
    let m = points / 2;
    catalan(m) * catalan(m + 2) - catalan(m + 1).pow(2)
}

/// A set of admitted half-step pairs for shapes with fewer than `k` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepPairSet {
    k: usize,
    pairs: BTreeSet<(ShapeStep, ShapeStep)>,
}

impl StepPairSet {
    fn build(k: usize, make: impl Fn(usize, usize, &mut BTreeSet<(ShapeStep, ShapeStep)>)) -> Self {
        assert!(k >= 2, "noncrossing bound must be at least 2");
        let mut pairs = BTreeSet::new();
        for h in 0..k - 1 {
            for l in 0..k - 1 {
                make(h, l, &mut pairs);
            }
        }
        StepPairSet { k, pairs }
    }

    /// Perfect matchings: close or open one arc per vertex.
    pub fn matchings(k: usize) -> Self {
        Self::build(k, |h, _, s| {
            s.insert((ShapeStep::Remove(h), ShapeStep::Stay));
            s.insert((ShapeStep::Stay, ShapeStep::Add(h)));
        })
    }

    pub fn partitions(k: usize) -> Self {
        Self::build(k, |h, l, s| {
            s.insert((ShapeStep::Stay, ShapeStep::Stay));
            s.insert((ShapeStep::Remove(h), ShapeStep::Stay));
            s.insert((ShapeStep::Stay, ShapeStep::Add(h)));
            s.insert((ShapeStep::Remove(h), ShapeStep::Add(l)));
        })
    }

    /// Braids without isolated points.
    pub fn braids(k: usize) -> Self {
        Self::build(k, |h, l, s| {
            s.insert((ShapeStep::Remove(h), ShapeStep::Stay));
            s.insert((ShapeStep::Stay, ShapeStep::Add(h)));
            s.insert((ShapeStep::Add(h), ShapeStep::Remove(l)));
        })
    }

    /// Every pair a vacillating tableau admits.
    pub fn tangled(k: usize) -> Self {
        Self::build(k, |h, l, s| {
            s.insert((ShapeStep::Stay, ShapeStep::Stay));
            s.insert((ShapeStep::Remove(h), ShapeStep::Stay));
            s.insert((ShapeStep::Stay, ShapeStep::Add(h)));
            s.insert((ShapeStep::Add(h), ShapeStep::Add(l)));
            s.insert((ShapeStep::Add(h), ShapeStep::Remove(l)));
            s.insert((ShapeStep::Remove(h), ShapeStep::Add(l)));
            s.insert((ShapeStep::Remove(h), ShapeStep::Remove(l)));
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn contains(&self, pair: (ShapeStep, ShapeStep)) -> bool {
        self.pairs.contains(&pair)
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(ShapeStep, ShapeStep)> {
        self.pairs.iter()
    }

    fn apply(&self, shape: &Shape, (a, b): (ShapeStep, ShapeStep)) -> Option<Shape> {
        let step = |s: &Shape, st: ShapeStep| match st {
            ShapeStep::Stay => Some(s.clone()),
            ShapeStep::Add(r) => s.add(r).filter(|s| s.row_count() < self.k),
            ShapeStep::Remove(r) => s.remove(r),
        };
        step(&step(shape, a)?, b)
    }
}

impl fmt::Display for StepPairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: ShapeStep| match s {
            ShapeStep::Stay => "0".to_string(),
            ShapeStep::Add(r) => format!("+{}", r + 1),
            ShapeStep::Remove(r) => format!("-{}", r + 1),
        };
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", show(a), show(b)))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Shape sequences `() = l_0, ..., l_2n = ()` with fewer than `k` rows whose
/// step pairs all lie in `steps`.
pub fn count_vacillating(steps: &StepPairSet, n: usize) -> BigUint {
    let mut layer: HashMap<Shape, BigUint> = HashMap::from([(Shape::empty(), BigUint::one())]);
    for vertex in 0..n {
        let remaining = n - vertex - 1;
        let mut next: HashMap<Shape, BigUint> = HashMap::new();
        for (shape, count) in &layer {
            for &pair in steps.pairs() {
                if let Some(s) = steps.apply(shape, pair) {
                    // at most two squares can vanish per vertex
                    if s.size() as usize <= 2 * remaining {
                        *next.entry(s).or_default() += count;
                    }
                }
            }
        }
        layer = next;
    }
    layer.remove(&Shape::empty()).unwrap_or_default()
}

/// Lists the sequences counted by [`count_vacillating`].
pub fn enumerate_vacillating(steps: &StepPairSet, n: usize) -> Vec<VacillatingTableau> {
    fn walk(steps: &StepPairSet, n: usize, shapes: &mut Vec<Shape>, out: &mut Vec<VacillatingTableau>) {
        let done = (shapes.len() - 1) / 2;
        let current = shapes.last().expect("nonempty").clone();
        if done == n {
            if current.is_empty() {
                out.push(VacillatingTableau::new(shapes.clone()).expect("admitted steps"));
            }
            return;
        }
        if current.size() as usize > 2 * (n - done) {
            return;
        }
        for &(a, b) in steps.pairs() {
            let Some(end) = steps.apply(&current, (a, b)) else { continue };
            let mid = steps
                .apply(&current, (a, ShapeStep::Stay))
                .expect("first half of a valid pair");
            shapes.push(mid);
            shapes.push(end);
            walk(steps, n, shapes, out);
            shapes.truncate(shapes.len() - 2);
        }
    }
    let mut out = Vec::new();
    walk(steps, n, &mut vec![Shape::empty()], &mut out);
    out
}

/// Perfect matchings on `points` points without `k` mutually crossing arcs.
pub fn f_k(k: usize, points: usize) -> Result<BigUint, CountError> {
    if k < 2 {
        return Err(CountError::BadK(k));
    }
    Ok(match k {
        _ if points % 2 == 1 => BigUint::zero(),
        2 => catalan(points as u64 / 2),
        3 => f3_closed(points as u64),
        _ => count_vacillating(&StepPairSet::matchings(k), points),
    })
}

/// `k`-noncrossing tangled diagrams over `[n]` with `ell` degree-2 vertices:
/// `sum_i C(n, i) C(n - i, ell) f_k(n - i + ell)`, zero when `ell > n`.
pub fn d_count(n: usize, ell: usize, k: usize) -> Result<BigUint, CountError> {
    let mut total = BigUint::zero();
    for isolated in 0..=n {
        let choose = binomial(n as i64, isolated as i64) * binomial((n - isolated) as i64, ell as i64);
        if !choose.is_zero() {
            total += choose * f_k(k, n - isolated + ell)?;
        }
    }
    Ok(total)
}

/// `(k, m, sign)` triples of the twelve-term sum for `p_{3,2}(n + 1)`.
const P32_TERMS: [(i64, i64, i64); 12] = [
    (1, 0, 1),
    (1, -1, -1),
    (1, -4, -1),
    (1, -3, 1),
    (3, 4, -1),
    (3, 3, 1),
    (3, 0, 1),
    (3, 1, -1),
    (2, 5, 1),
    (2, 4, -1),
    (2, 1, -1),
    (2, 2, 1),
];

/// `p_{3,2}(n + 1)`, the 2-regular 3-noncrossing partitions of `[n + 1]`,
/// from the signed sum of `(k / (n+1)) C(n+1, s) C(n+1, k+s) C(n+1, s+m)`.
/// The common factor `1 / (n + 1)` is divided out once at the end.
pub fn p32_closed(n: u64) -> Result<BigUint, CountError> {
    let top = n as i64 + 1;
    let mut sum = BigInt::zero();
    for s in 0..=top {
        let outer = binomial(top, s);
        for &(k, m, sign) in &P32_TERMS {
            let term = &outer * binomial(top, k + s) * binomial(top, s + m) * BigUint::from(k as u64);
            if sign > 0 {
                sum += BigInt::from(term);
            } else {
                sum -= BigInt::from(term);
            }
        }
    }
    let divisor = BigInt::from(top);
    let (q, r) = sum.div_rem(&divisor);
    if !r.is_zero() || q.is_negative() {
        return Err(CountError::InexactDivision { sum, divisor });
    }
    Ok(q.to_biguint().expect("nonnegative"))
}

/// `p_{3,2}(n)` through braids: shape sequences of length `n - 1` in the
/// braid alphabet with at most two rows.
pub fn p32_via_braids(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    count_vacillating(&StepPairSet::braids(3), n - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub x: u32,
    pub y: u32,
}

impl LatticePoint {
    pub const fn new(x: u32, y: u32) -> Self {
        LatticePoint { x, y }
    }

    /// Image of a shape with at most two rows: `(a, b) -> (a + 1, b)`.
    pub fn from_shape(shape: &Shape) -> Option<Self> {
        (shape.row_count() <= 2).then(|| LatticePoint::new(shape.row(0) + 1, shape.row(1)))
    }
}

type Delta = (i32, i32);
const E1: Delta = (1, 0);
const E2: Delta = (0, 1);
const NONE: Delta = (0, 0);
const fn neg(d: Delta) -> Delta {
    (-d.0, -d.1)
}

/// The braid alphabet as pairs of unit moves in the plane.
pub const BRAID_WALK_STEPS: [(Delta, Delta); 8] = [
    (NONE, E1),
    (NONE, E2),
    (neg(E1), NONE),
    (neg(E2), NONE),
    (E1, neg(E1)),
    (E2, neg(E2)),
    (E1, neg(E2)),
    (E2, neg(E1)),
];

fn walk_count(
    start: LatticePoint,
    end: LatticePoint,
    halfsteps: usize,
    inside: impl Fn(i64, i64) -> bool,
) -> Result<BigUint, CountError> {
    if halfsteps % 2 == 1 {
        return Err(CountError::OddLength(halfsteps));
    }
    let size = (start.x.max(start.y) as usize) + halfsteps + 2;
    let at = |x: i64, y: i64| x as usize * size + y as usize;
    let mut grid = vec![BigUint::zero(); size * size];
    if inside(start.x as i64, start.y as i64) {
        grid[at(start.x as i64, start.y as i64)] = BigUint::one();
    }
    for _ in 0..halfsteps / 2 {
        let mut next = vec![BigUint::zero(); size * size];
        for x in 0..size as i64 {
            for y in 0..size as i64 {
                let count = &grid[at(x, y)];
                if count.is_zero() {
                    continue;
                }
                for ((dx1, dy1), (dx2, dy2)) in BRAID_WALK_STEPS {
                    let (mx, my) = (x + dx1 as i64, y + dy1 as i64);
                    let (ex, ey) = (mx + dx2 as i64, my + dy2 as i64);
                    if inside(mx, my) && inside(ex, ey) && (ex as usize) < size && (ey as usize) < size {
                        next[at(ex, ey)] += count;
                    }
                }
            }
        }
        grid = next;
    }
    let (ex, ey) = (end.x as usize, end.y as usize);
    if ex >= size || ey >= size {
        return Ok(BigUint::zero());
    }
    Ok(grid[ex * size + ey].clone())
}

/// Walks of `halfsteps` half-steps in the braid alphabet staying in
/// `x >= 0, y >= 0`.
pub fn quadrant_walks(start: LatticePoint, end: LatticePoint, halfsteps: usize) -> Result<BigUint, CountError> {
    walk_count(start, end, halfsteps, |x, y| x >= 0 && y >= 0)
}

/// Walks from `(1, 0)` back to itself that stay strictly below the diagonal,
/// `x > y >= 0`, counted directly.
pub fn constrained_walks(halfsteps: usize) -> Result<BigUint, CountError> {
    let origin = LatticePoint::new(1, 0);
    walk_count(origin, origin, halfsteps, |x, y| x > y && y >= 0)
}

/// Wall-avoiding walks as the difference of two quadrant counts: the walks
/// touching `x = y` cancel against their reflections ending at `(0, 1)`.
pub fn reflection_count(halfsteps: usize) -> Result<BigUint, CountError> {
    let origin = LatticePoint::new(1, 0);
    let mirror = LatticePoint::new(0, 1);
    let all = quadrant_walks(origin, origin, halfsteps)?;
    let reflected = quadrant_walks(origin, mirror, halfsteps)?;
    Ok(all - reflected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomials_vanish_outside_range() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, -1), big(0));
        assert_eq!(binomial(5, 6), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(5), big(42));
    }

    #[test]
    fn three_noncrossing_matchings() {
        assert_eq!(f3_closed(2), big(1));
        assert_eq!(f3_closed(4), big(3));
        assert_eq!(f3_closed(6), big(14));
        assert_eq!(f3_closed(5), big(0));
        assert_eq!(f3_closed(0), big(1));
    }

    #[test]
    fn shape_dp() {
        assert_eq!(count_vacillating(&StepPairSet::matchings(3), 4), big(3));
        assert_eq!(count_vacillating(&StepPairSet::partitions(3), 3), big(5));
        assert_eq!(count_vacillating(&StepPairSet::braids(3), 2), big(2));
        // noncrossing matchings are Catalan
        for m in 0..8 {
            assert_eq!(count_vacillating(&StepPairSet::matchings(2), 2 * m), catalan(m as u64));
        }
        // no row bound in effect: all partitions
        assert_eq!(count_vacillating(&StepPairSet::partitions(6), 5), big(52));
    }

    #[test]
    fn enumeration_agrees_with_dp() {
        for steps in [
            StepPairSet::matchings(3),
            StepPairSet::partitions(3),
            StepPairSet::braids(3),
            StepPairSet::tangled(3),
        ] {
            for n in 0..=4 {
                let listed = enumerate_vacillating(&steps, n);
                assert_eq!(BigUint::from(listed.len()), count_vacillating(&steps, n));
                assert!(listed
                    .iter()
                    .all(|vt| vt.step_pairs().into_iter().all(|p| steps.contains(p))));
            }
        }
    }

    #[test]
    fn tangled_counts() {
        assert_eq!(d_count(5, 1, 3).unwrap(), big(165));
        assert_eq!(d_count(4, 2, 3).unwrap(), big(102));
        assert_eq!(d_count(10, 3, 3).unwrap(), big(6672120));
        assert_eq!(d_count(3, 4, 3).unwrap(), big(0));
        assert_eq!(d_count(1, 2, 3).unwrap(), big(0));
        assert_eq!(d_count(3, 1, 1), Err(CountError::BadK(1)));
        // k = 4 through the shape DP agrees with the k = 3 closed form below
        // the first 4-crossing
        assert_eq!(f_k(4, 6).unwrap(), big(15));
        assert_eq!(f_k(4, 8).unwrap(), big(105 - 1));
    }

    #[test]
    fn braid_sum() {
        assert_eq!(p32_closed(1).unwrap(), big(1));
        assert_eq!(p32_closed(5).unwrap(), big(51));
        assert_eq!(p32_closed(11).unwrap(), big(348889));
    }

    #[test]
    fn quadrant() {
        let o = LatticePoint::new(1, 0);
        let m = LatticePoint::new(0, 1);
        assert_eq!(quadrant_walks(o, o, 2).unwrap(), big(2));
        assert_eq!(quadrant_walks(o, m, 2).unwrap(), big(1));
        assert_eq!(quadrant_walks(o, o, 0).unwrap(), big(1));
        assert_eq!(quadrant_walks(o, o, 3), Err(CountError::OddLength(3)));
    }

    #[test]
    fn reflection() {
        assert_eq!(reflection_count(0).unwrap(), big(1));
        assert_eq!(reflection_count(2).unwrap(), big(1));
        assert_eq!(reflection_count(4).unwrap(), big(2));
        assert_eq!(reflection_count(5), Err(CountError::OddLength(5)));
        for half in (0..=16).step_by(2) {
            assert_eq!(reflection_count(half).unwrap(), constrained_walks(half).unwrap());
        }
    }

    #[test]
    fn shape_to_point() {
        assert_eq!(LatticePoint::from_shape(&Shape::empty()), Some(LatticePoint::new(1, 0)));
        let s = Shape::new(vec![3, 2]).unwrap();
        assert_eq!(LatticePoint::from_shape(&s), Some(LatticePoint::new(4, 2)));
        assert_eq!(LatticePoint::from_shape(&Shape::new(vec![1, 1, 1]).unwrap()), None);
    }
}
