//! Duality between 2-regular partitions over `[n]` and braids without
//! isolated points over `[n - 1]`: every arc `(i, j)` shortens to `(i, j - 1)`.

use thiserror::Error;

use crate::diagram::{Incidence, TangledDiagram, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("not a 2-regular partition on at least two vertices")]
    NotTwoRegularPartition,
    #[error("not a braid without isolated points")]
    NotBraid,
}

/// Shortens every arc by one on the right and fills each vertex left without
/// arcs with a loop. Vertex `v` of the image is arc-free exactly when `v` opens
/// no arc of `p` and `v + 1` closes none.
pub fn theta(p: &TangledDiagram) -> Result<TangledDiagram, ThetaError> {
    if p.n() < 2 || !p.is_two_regular_partition() {
        return Err(ThetaError::NotTwoRegularPartition);
    }
    let m = p.n() - 1;
    let mut arcs: Vec<(Vertex, Vertex)> = p.arcs().iter().map(|&(i, j)| (i, j - 1)).collect();
    let mut touched = vec![false; m as usize + 1];
    for &(i, j) in &arcs {
        touched[i as usize] = true;
        touched[j as usize] = true;
    }
    arcs.extend((1..=m).filter(|&v| !touched[v as usize]).map(|v| (v, v)));
    let crossed: Vec<Vertex> = (1..=m)
        .filter(|&v| arcs.iter().filter(|&&(i, j)| i != j && (i == v || j == v)).count() == 2)
        .collect();
    let b = TangledDiagram::new(m, arcs, crossed).expect("shortened arcs form a braid");
    debug_assert!(b.is_braid_without_isolated());
    Ok(b)
}

pub fn theta_inv(b: &TangledDiagram) -> Result<TangledDiagram, ThetaError> {
    if !b.is_braid_without_isolated() {
        return Err(ThetaError::NotBraid);
    }
    let arcs = b
        .arcs()
        .iter()
        .filter(|&&(i, j)| i != j)
        .map(|&(i, j)| (i, j + 1));
    let p = TangledDiagram::new(b.n() + 1, arcs, []).expect("lengthened arcs form a partition");
    debug_assert!(p.is_two_regular_partition());
    debug_assert!((1..=b.n()).all(|v| b.incidence(v) != Incidence::Isolated));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: Vertex, arcs: &[(Vertex, Vertex)], crossed: &[Vertex]) -> TangledDiagram {
        TangledDiagram::new(n, arcs.iter().copied(), crossed.iter().copied()).unwrap()
    }

    #[test]
    fn forward() {
        assert_eq!(theta(&d(3, &[], &[])).unwrap(), d(2, &[(1, 1), (2, 2)], &[]));
        assert_eq!(theta(&d(3, &[(1, 3)], &[])).unwrap(), d(2, &[(1, 2)], &[]));
        assert_eq!(
            theta(&d(4, &[(1, 3), (2, 4)], &[])).unwrap(),
            d(3, &[(1, 2), (2, 3)], &[2])
        );
        assert_eq!(
            theta(&d(3, &[(1, 2)], &[])),
            Err(ThetaError::NotTwoRegularPartition)
        );
        assert_eq!(theta(&d(1, &[], &[])), Err(ThetaError::NotTwoRegularPartition));
    }

    #[test]
    fn backward() {
        assert_eq!(theta_inv(&d(2, &[(1, 2)], &[])).unwrap(), d(3, &[(1, 3)], &[]));
        assert_eq!(theta_inv(&d(2, &[(1, 1), (2, 2)], &[])).unwrap(), d(3, &[], &[]));
        assert_eq!(
            theta_inv(&d(3, &[(1, 2), (2, 3)], &[2])).unwrap(),
            d(4, &[(1, 3), (2, 4)], &[])
        );
        assert_eq!(theta_inv(&d(2, &[(1, 1)], &[])), Err(ThetaError::NotBraid));
        assert_eq!(theta_inv(&d(3, &[(1, 2), (2, 3)], &[])), Err(ThetaError::NotBraid));
    }
}
