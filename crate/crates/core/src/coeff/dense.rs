//! Dense recursive representation `Z[s][r]` used for gcd computations.
//!
//! The gcd is computed by the primitive polynomial remainder sequence in `r`
//! over `Z[s]`, with contents in `Z[s]` handled by the same algorithm one
//! level down.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly2;

/// Univariate polynomial in `s`, index = degree, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Polynomial in `r` with `Z[s]` coefficients, index = r-degree, no trailing zeros.
type BPoly = Vec<UPoly>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn btrim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_scale(p: &UPoly, k: &BigInt) -> UPoly {
    if k.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c * k).collect()
}

fn u_div_int(p: &UPoly, k: &BigInt) -> UPoly {
    p.iter().map(|c| c / k).collect()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Exact division in `Z[s]`; panics if the division is not exact.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = a.clone();
    if rem.len() < b.len() {
        panic!("inexact division in Z[s]");
    }
    let mut q = vec![BigInt::zero(); rem.len() - db];
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let (qc, r) = rem[rem.len() - 1].div_rem(lb);
        assert!(r.is_zero(), "inexact division in Z[s]");
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &qc * c;
        }
        q[k] = qc;
        trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact division in Z[s]");
    trim(&mut q);
    q
}

/// Pseudo-remainder of `a` by `b` (both in `Z[s]`).
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = a.clone();
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let lr = rem[rem.len() - 1].clone();
        rem = u_scale(&rem, lb);
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &lr * c;
        }
        trim(&mut rem);
    }
    rem
}

fn u_primitive(p: &UPoly) -> UPoly {
    let c = u_content(p);
    if c.is_zero() || c.is_one() {
        p.clone()
    } else {
        u_div_int(p, &c)
    }
}

/// Gcd in `Z[s]` with positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize(b);
    }
    if b.is_empty() {
        return u_normalize(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    let g = u_primitive(&x);
    u_normalize(&u_scale(&g, &c))
}

fn u_normalize(p: &UPoly) -> UPoly {
    match p.last() {
        Some(c) if c.is_negative() => p.iter().map(|c| -c).collect(),
        _ => p.clone(),
    }
}

fn to_dense(p: &Poly2) -> BPoly {
    let dr = p.deg_r() as usize;
    let ds = p.deg_s() as usize;
    let mut out: BPoly = vec![vec![BigInt::zero(); ds + 1]; dr + 1];
    for (e, c) in p.terms() {
        out[e.0 as usize][e.1 as usize] = c.clone();
    }
    for row in out.iter_mut() {
        trim(row);
    }
    btrim(&mut out);
    out
}

fn from_dense(p: &BPoly) -> Poly2 {
    let mut terms = Vec::new();
    for (i, row) in p.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(((i as u32, j as u32), c.clone()));
            }
        }
    }
    Poly2::from_terms(terms)
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u(p: &BPoly, d: &UPoly) -> BPoly {
    if d.len() == 1 && d[0].is_one() {
        return p.clone();
    }
    p.iter().map(|c| if c.is_empty() { Vec::new() } else { u_div_exact(c, d) }).collect()
}

fn b_primitive(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if c.is_empty() {
        return p.clone();
    }
    b_div_u(p, &c)
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = a.clone();
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let lr = rem[rem.len() - 1].clone();
        rem = rem.iter().map(|c| u_mul(c, lb)).collect();
        for (i, c) in b.iter().enumerate() {
            let t = u_mul(&lr, c);
            rem[k + i] = u_sub(&rem[k + i], &t);
        }
        btrim(&mut rem);
    }
    rem
}

/// Gcd of two nonzero polynomials without monomial content.
pub(crate) fn gcd(a: &Poly2, b: &Poly2) -> Poly2 {
    let x = to_dense(a);
    let y = to_dense(b);
    if x.len() == 1 && y.len() == 1 {
        return from_dense(&vec![u_gcd(&x[0], &y[0])]);
    }
    let cx = b_content(&x);
    let cy = b_content(&y);
    let c = u_gcd(&cx, &cy);
    let (mut x, mut y) = (b_div_u(&x, &cx), b_div_u(&y, &cy));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    let g = b_primitive(&x);
    let g: BPoly = g.iter().map(|row| u_mul(row, &c)).collect();
    from_dense(&g)
}
