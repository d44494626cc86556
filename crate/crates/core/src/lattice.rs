//! Intersection lattice, Möbius function and characteristic polynomial.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::arrangement::Arrangement;
use crate::linalg::RowSpace;

/// One element `X` of the intersection lattice.
///
/// `space` is the span of the forms vanishing on `X`, so its rank is the
/// codimension of `X`. `indices` are the one-based positions of those forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub space: RowSpace,
    pub indices: Vec<usize>,
    pub codim: usize,
    pub mobius: i64,
}

impl Flat {
    /// `dim X`.
    pub fn dim(&self) -> usize {
        self.space.ambient_dim() - self.codim
    }

    pub fn is_bottom(&self) -> bool {
        self.indices.is_empty()
    }
}

/// All flats of an arrangement, ordered by codimension and then by index
/// set. The first entry is always the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionLattice {
    flats: Vec<Flat>,
}

impl IntersectionLattice {
    pub fn new(arrangement: &Arrangement) -> Self {
        let forms = arrangement.form_vectors();
        let indices_of = |space: &RowSpace| -> Vec<usize> {
            (0..forms.len()).filter(|&i| space.contains(&forms[i])).map(|i| i + 1).collect()
        };

        let bottom = RowSpace::zero(arrangement.dim());
        let mut seen: HashMap<RowSpace, Vec<usize>> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(bottom.clone(), Vec::new());
        queue.push_back(bottom);
        while let Some(space) = queue.pop_front() {
            let indices = seen[&space].clone();
            for (i, form) in forms.iter().enumerate() {
                if indices.binary_search(&(i + 1)).is_ok() {
                    continue;
                }
                let next = space.with_vector(form);
                if !seen.contains_key(&next) {
                    let j = indices_of(&next);
                    seen.insert(next.clone(), j);
                    queue.push_back(next);
                }
            }
        }

        let mut flats: Vec<Flat> = seen
            .into_iter()
            .map(|(space, indices)| Flat { codim: space.rank(), space, indices, mobius: 0 })
            .collect();
        flats.sort_by(|a, b| (a.codim, &a.indices).cmp(&(b.codim, &b.indices)));
        assign_mobius(&mut flats);
        IntersectionLattice { flats }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn bottom(&self) -> &Flat {
        &self.flats[0]
    }

    /// Flat with the given one-based index set, if it is closed.
    pub fn find(&self, indices: &[usize]) -> Option<&Flat> {
        self.flats.iter().find(|f| f.indices == indices)
    }

    /// `chi(t) = sum_X mu(X) t^{dim X}`.
    pub fn characteristic_polynomial(&self) -> CharPoly {
        let n = self.bottom().space.ambient_dim();
        let mut coeffs = vec![0i128; n + 1];
        for flat in &self.flats {
            coeffs[flat.dim()] += flat.mobius as i128;
        }
        CharPoly::new(coeffs)
    }
}

/// Möbius values from the bottom up. Flats must be sorted by codimension.
fn assign_mobius(flats: &mut [Flat]) {
    for k in 0..flats.len() {
        if flats[k].is_bottom() {
            flats[k].mobius = 1;
            continue;
        }
        let below: i64 = flats[..k]
            .iter()
            .filter(|y| y.codim < flats[k].codim && is_subset(&y.indices, &flats[k].indices))
            .map(|y| y.mobius)
            .sum();
        flats[k].mobius = -below;
    }
}

/// Both slices sorted ascending.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

pub fn intersection_lattice(arrangement: &Arrangement) -> IntersectionLattice {
    IntersectionLattice::new(arrangement)
}

pub fn char_poly(arrangement: &Arrangement) -> CharPoly {
    IntersectionLattice::new(arrangement).characteristic_polynomial()
}

/// Univariate integer polynomial in `t`; `coeffs[k]` multiplies `t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<i128>,
}

impl CharPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        CharPoly { coeffs }
    }

    /// `prod (t - r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut coeffs = vec![1i128];
        for &r in roots {
            let mut next = vec![0i128; coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r as i128;
            }
            coeffs = next;
        }
        CharPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * t + c)
    }

    /// Synthetic division by `t - root`; `None` if `root` is not a root.
    pub fn deflate(&self, root: i128) -> Option<CharPoly> {
        if self.degree() == 0 {
            return None;
        }
        let d = self.degree();
        let mut quot = vec![0i128; d];
        let mut carry = 0i128;
        for k in (0..=d).rev() {
            let v = self.coeffs[k] + carry * root;
            if k == 0 {
                return (v == 0).then(|| CharPoly::new(quot));
            }
            quot[k - 1] = v;
            carry = v;
        }
        unreachable!()
    }

    /// Nonnegative integer roots with multiplicity when the polynomial is
    /// monic and splits completely over them.
    pub fn nonnegative_integer_roots(&self) -> Option<Vec<u32>> {
        if self.coeffs.last() != Some(&1) {
            return None;
        }
        let mut rest = self.clone();
        let mut roots = Vec::new();
        // roots of a split monic polynomial are bounded by |coefficient of t^{d-1}|
        let bound = self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
        let mut r: u128 = 0;
        while rest.degree() > 0 && r <= bound {
            match rest.deflate(r as i128) {
                Some(q) => {
                    roots.push(r as u32);
                    rest = q;
                }
                None => r += 1,
            }
        }
        (rest.degree() == 0).then_some(roots)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 && !(k == 0 && out.is_empty()) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            if a != 1 || k == 0 {
                out.push_str(&a.to_string());
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ if latex => out.push_str(&format!("t^{{{k}}}")),
                _ => out.push_str(&format!("t^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
