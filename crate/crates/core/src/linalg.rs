//! Exact sparse linear algebra over `Q(r, s)`.
//!
//! Systems are split into connected components (rows sharing a column).
//! Each component is reduced by fraction-free elimination on polynomial rows:
//! denominators are cleared, `row <- p*row - a*pivot`, and every new row is
//! divided by the gcd of its entries. The echelon form is then normalized and
//! back-substituted in `Q(r, s)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::coeff::{Poly2, RatF};

/// Sparse row: column index to nonzero coefficient.
pub type SparseRow = BTreeMap<usize, RatF>;

type PolyRow = BTreeMap<usize, Poly2>;

fn lcm(a: &Poly2, b: &Poly2) -> Poly2 {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    a.div_exact(&g).expect("gcd divides").mul(b)
}

fn clear_denominators(row: &SparseRow) -> PolyRow {
    let l = row.values().fold(Poly2::one(), |acc, c| lcm(&acc, c.den()));
    row.iter()
        .map(|(&k, c)| {
            let f = l.div_exact(c.den()).expect("lcm is a multiple");
            (k, c.num().mul(&f))
        })
        .collect()
}

fn make_primitive(row: &mut PolyRow) {
    let mut g = Poly2::zero();
    for c in row.values() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in row.values_mut() {
        *c = c.div_exact(&g).expect("content divides");
    }
}

fn weight(row: &PolyRow) -> usize {
    row.values().map(Poly2::len).sum()
}

/// Reduced row echelon form: `(pivot column, row with 1 at the pivot)`, sorted by pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pub rows: Vec<(usize, SparseRow)>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }
}

fn eliminate_component(rows: Vec<PolyRow>) -> Vec<(usize, SparseRow)> {
    let mut active: Vec<PolyRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: Vec<(usize, PolyRow)> = Vec::new();
    while !active.is_empty() {
        let col = active.iter().filter_map(|r| r.keys().next().copied()).min().expect("nonempty rows");
        let (idx, _) =
            active.iter().enumerate().filter(|(_, r)| r.keys().next() == Some(&col)).min_by_key(|(_, r)| weight(r)).expect("some row has the pivot column");
        let piv = active.swap_remove(idx);
        let p = piv[&col].clone();
        let mut next = Vec::with_capacity(active.len());
        for mut row in active {
            if let Some(a) = row.get(&col).cloned() {
                let mut out: PolyRow = BTreeMap::new();
                for (&k, v) in &row {
                    out.insert(k, v.mul(&p));
                }
                for (&k, v) in &piv {
                    let t = v.mul(&a);
                    let e = out.entry(k).or_insert_with(Poly2::zero);
                    *e = e.sub(&t);
                }
                out.retain(|_, v| !v.is_zero());
                row = out;
                make_primitive(&mut row);
            }
            if !row.is_empty() {
                next.push(row);
            }
        }
        active = next;
        pivots.push((col, piv));
    }
    // normalize and back-substitute
    let mut out: Vec<(usize, SparseRow)> = pivots
        .into_iter()
        .map(|(col, row)| {
            let p = RatF::from_poly(row[&col].clone());
            let pinv = p.inv().expect("pivot nonzero");
            let r: SparseRow = row.into_iter().map(|(k, v)| (k, RatF::from_poly(v) * &pinv)).collect();
            (col, r)
        })
        .collect();
    for i in (0..out.len()).rev() {
        let (pc, prow) = out[i].clone();
        for row in out.iter_mut().take(i) {
            if let Some(a) = row.1.get(&pc).cloned() {
                for (&k, v) in &prow {
                    let t = v * &a;
                    let e = row.1.entry(k).or_insert_with(RatF::zero);
                    *e = &*e - &t;
                }
                row.1.retain(|_, v| !v.is_zero());
            }
        }
    }
    out
}

/// Groups row indices into components connected through shared columns.
fn components(rows: &[SparseRow], ncols: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..ncols).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for row in rows {
        let mut it = row.keys();
        if let Some(&first) = it.next() {
            for &k in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, k));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        if let Some(&first) = row.keys().next() {
            groups.entry(find(&mut parent, first)).or_default().push(i);
        }
    }
    groups.into_values().collect()
}

/// Reduced row echelon form of the system.
pub fn echelon(rows: &[SparseRow], ncols: usize) -> Echelon {
    debug_assert!(rows.iter().all(|r| r.keys().all(|&k| k < ncols)));
    let comps = components(rows, ncols);
    let mut out: Vec<(usize, SparseRow)> = comps
        .par_iter()
        .flat_map_iter(|idx| {
            let polys: Vec<PolyRow> = idx.iter().map(|&i| clear_denominators(&rows[i])).collect();
            eliminate_component(polys)
        })
        .collect();
    out.sort_by_key(|(p, _)| *p);
    Echelon { rows: out }
}

pub fn rank(rows: &[SparseRow], ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

/// Basis of `{x : A x = 0}`; one vector per free column, with a 1 in that column.
pub fn nullspace(rows: &[SparseRow], ncols: usize) -> Vec<Vec<RatF>> {
    let ech = echelon(rows, ncols);
    let pivots = ech.pivots();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.binary_search(&free).is_ok() {
            continue;
        }
        let mut v = vec![RatF::zero(); ncols];
        v[free] = RatF::one();
        for (p, row) in &ech.rows {
            if let Some(c) = row.get(&free) {
                v[*p] = -c;
            }
        }
        basis.push(v);
    }
    basis
}

/// A solution of `A x = b` with free variables set to zero, or `None` if inconsistent.
pub fn solve(rows: &[SparseRow], rhs: &[RatF], ncols: usize) -> Option<Vec<RatF>> {
    assert_eq!(rows.len(), rhs.len());
    let aug: Vec<SparseRow> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            if !b.is_zero() {
                r.insert(ncols, b.clone());
            }
            r
        })
        .collect();
    let ech = echelon(&aug, ncols + 1);
    let mut x = vec![RatF::zero(); ncols];
    for (p, row) in &ech.rows {
        if *p == ncols {
            return None;
        }
        if let Some(b) = row.get(&ncols) {
            x[*p] = b.clone();
        }
    }
    Some(x)
}

/// Applies a sparse row to a dense vector.
pub fn dot(row: &SparseRow, x: &[RatF]) -> RatF {
    row.iter().fold(RatF::zero(), |acc, (&k, c)| acc + c * &x[k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> RatF {
        RatF::parse(s).unwrap()
    }

    fn row(entries: &[(usize, &str)]) -> SparseRow {
        entries.iter().map(|&(k, v)| (k, q(v))).filter(|(_, v)| !v.is_zero()).collect()
    }

    #[test]
    fn nullspace_of_parametric_system() {
        // x0*r - x1*s = 0, x1*(r+s) - x2 = 0, x3 + x4 = 0
        let rows = vec![row(&[(0, "r"), (1, "-s")]), row(&[(1, "r+s"), (2, "-1")]), row(&[(3, "1"), (4, "1")])];
        let ns = nullspace(&rows, 5);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert!(dot(r, v).is_zero());
            }
        }
        assert_eq!(rank(&rows, 5), 3);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let rows = vec![row(&[(0, "r-s"), (1, "1")]), row(&[(0, "1"), (1, "1/(r-s)")])];
        // second row is first / (r-s): consistent only when rhs scales the same way
        let ok = solve(&rows, &[q("r"), q("r/(r-s)")], 2).unwrap();
        for (r, b) in rows.iter().zip([q("r"), q("r/(r-s)")]) {
            assert_eq!(dot(r, &ok), b);
        }
        assert!(solve(&rows, &[q("r"), q("1")], 2).is_none());
    }
}
