//! Brute-force isomorphism search between small finite algebras.

use crate::alg::Algebra;

fn signature<A: Algebra>(alg: &A, x: usize) -> (bool, bool, usize, usize, Vec<usize>) {
    let n = alg.size();
    let below = (0..n).filter(|&z| alg.leq(z, x)).count();
    let above = (0..n).filter(|&z| alg.leq(x, z)).count();
    // multiset of |down-sets| along the mul row, a cheap op-aware refinement
    let mut row: Vec<usize> = (0..n)
        .map(|y| {
            let p = alg.mul(x, y);
            (0..n).filter(|&z| alg.leq(z, p)).count()
        })
        .collect();
    row.sort_unstable();
    (
        x == alg.unit(),
        Some(x) == alg.bottom(),
        below,
        above,
        row,
    )
}

/// Searches for a bijection preserving `mul`, `ldiv`, `rdiv` (and the lattice
/// tables when both sides carry them), returning the image vector indexed by
/// elements of `a`. Unit and bounds are preserved by construction.
pub fn find_isomorphism<A: Algebra, B: Algebra>(a: &A, b: &B) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let sig_a: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sig_a[x] == sig_b[y]).collect())
        .collect();

    // most-constrained element first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| candidates[x].len());

    let mut search = Search {
        a,
        b,
        order,
        candidates,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        lattices: a.lattice_tables().is_some() && b.lattice_tables().is_some(),
    };
    search.solve(0).then_some(search.image)
}

struct Search<'s, A: Algebra, B: Algebra> {
    a: &'s A,
    b: &'s B,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    lattices: bool,
}

impl<A: Algebra, B: Algebra> Search<'_, A, B> {
    /// All constraints touching `x` still satisfiable under the partial map.
    fn compatible(&self, x: usize) -> bool {
        let image = &self.image;
        let mapped = |preimage: usize, target: usize| {
            image[preimage] == usize::MAX || image[preimage] == target
        };
        for z in 0..self.a.size() {
            if image[z] == usize::MAX {
                continue;
            }
            for (p, q) in [(x, z), (z, x)] {
                if !mapped(self.a.mul(p, q), self.b.mul(image[p], image[q]))
                    || !mapped(self.a.ldiv(p, q), self.b.ldiv(image[p], image[q]))
                    || !mapped(self.a.rdiv(p, q), self.b.rdiv(image[p], image[q]))
                {
                    return false;
                }
                if self.lattices {
                    let (ma, ja) = self.a.lattice_tables().unwrap();
                    let (mb, jb) = self.b.lattice_tables().unwrap();
                    if !mapped(ma.get(p, q), mb.get(image[p], image[q]))
                        || !mapped(ja.get(p, q), jb.get(image[p], image[q]))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn solve(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for idx in 0..self.candidates[x].len() {
            let y = self.candidates[x][idx];
            if self.used[y] {
                continue;
            }
            self.image[x] = y;
            self.used[y] = true;
            if self.compatible(x) && self.solve(depth + 1) {
                return true;
            }
            self.image[x] = usize::MAX;
            self.used[y] = false;
        }
        false
    }
}

pub fn are_isomorphic<A: Algebra, B: Algebra>(a: &A, b: &B) -> bool {
    find_isomorphism(a, b).is_some()
}
