use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::solve_combination;

/// Splitting of the hyperplanes into the connected components of their
/// linear matroid, plus the dimension `e0` of the common intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleDecomposition {
    /// One-based index blocks, each sorted, ordered by smallest element.
    pub blocks: Vec<Vec<usize>>,
    pub e0: usize,
}

impl IrreducibleDecomposition {
    /// Not a product of two nonempty arrangements.
    pub fn is_irreducible(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_essential(&self) -> bool {
        self.e0 == 0
    }
}

/// Connected components of the matroid of the forms.
///
/// A basis is chosen greedily; the support of each fundamental circuit
/// `C(e, B)` is merged into one class. Components never straddle a
/// circuit, and if no circuit crosses a part then that part spans a direct
/// summand, so the classes are exactly the components.
pub fn irreducible_components(arrangement: &Arrangement) -> Result<IrreducibleDecomposition> {
    let p = arrangement.len();
    if p == 0 {
        return Err(Error::EmptyArrangement);
    }
    let vectors = arrangement.form_vectors();
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_vectors = Vec::new();
    let mut classes = UnionFind::new(p);
    for (e, v) in vectors.iter().enumerate() {
        match solve_combination(&basis_vectors, v) {
            None => {
                basis.push(e);
                basis_vectors.push(v.clone());
            }
            Some(coeffs) => {
                for (b, c) in basis.iter().zip(&coeffs) {
                    if !num_traits::Zero::is_zero(c) {
                        classes.union(e, *b);
                    }
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block: Vec<Option<usize>> = vec![None; p];
    for i in 0..p {
        let root = classes.find(i);
        match root_block[root] {
            Some(k) => blocks[k].push(i + 1),
            None => {
                root_block[root] = Some(blocks.len());
                blocks.push(vec![i + 1]);
            }
        }
    }
    Ok(IrreducibleDecomposition { blocks, e0: arrangement.dim() - basis.len() })
}

/// Single block. The empty arrangement counts as reducible.
pub fn is_irreducible(arrangement: &Arrangement) -> bool {
    irreducible_components(arrangement).map(|d| d.is_irreducible()).unwrap_or(false)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so block order is stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Family;

    fn decompose(f: Family) -> IrreducibleDecomposition {
        irreducible_components(&Arrangement::family(f).unwrap()).unwrap()
    }

    #[test]
    fn boolean_splits_into_singletons() {
        let d = decompose(Family::Boolean(3));
        assert_eq!(d.blocks, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(d.e0, 0);
        assert!(!d.is_irreducible());
    }

    #[test]
    fn braid_is_one_block() {
        let d = decompose(Family::Braid(3));
        assert_eq!(d.blocks, vec![vec![1, 2, 3]]);
        assert_eq!(d.e0, 1);
        assert!(d.is_irreducible());
        assert!(!d.is_essential());
    }

    #[test]
    fn generic_plane_is_one_block() {
        assert_eq!(decompose(Family::Generic2d(3)).blocks, vec![vec![1, 2, 3]]);
        assert_eq!(decompose(Family::Generic2d(2)).blocks, vec![vec![1], vec![2]]);
    }

    #[test]
    fn mixed_product() {
        // braid(3) on x1..x3 times a lone hyperplane in x4, listed interleaved
        let a = Arrangement::from_integers(4, &[&[1, -1, 0, 0], &[0, 0, 0, 1], &[1, 0, -1, 0], &[0, 1, -1, 0]]).unwrap();
        let d = irreducible_components(&a).unwrap();
        assert_eq!(d.blocks, vec![vec![1, 3, 4], vec![2]]);
        assert_eq!(d.e0, 1);
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(irreducible_components(&Arrangement::empty(2)).unwrap_err(), Error::EmptyArrangement);
        assert!(!is_irreducible(&Arrangement::empty(2)));
    }
}
