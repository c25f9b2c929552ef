//! Alexander polynomials of braid-monodromy presentations by Fox calculus,
//! independent of the Burau and cokernel code in the library.

use alexandria::Poly;
use num_traits::{One, Zero};

/// Free-group word; letter `±(k+1)` is `x_k^{±1}`.
pub type FreeWord = Vec<i32>;

fn reduce(w: FreeWord) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|l| -l).collect()
}

/// Image of `x_k` (0-based) under one braid letter, Artin action.
fn letter_image(letter: i64, k: usize) -> FreeWord {
    let i = letter.unsigned_abs() as usize - 1;
    let (xi, xj) = (i as i32 + 1, i as i32 + 2);
    let g = k as i32 + 1;
    if letter > 0 {
        match k {
            _ if k == i => vec![xi, xj, -xi],
            _ if k == i + 1 => vec![xi],
            _ => vec![g],
        }
    } else {
        match k {
            _ if k == i => vec![xj],
            _ if k == i + 1 => vec![-xj, xi, xj],
            _ => vec![g],
        }
    }
}

fn substitute(w: &[i32], letter: i64) -> FreeWord {
    let mut out = Vec::new();
    for &l in w {
        let img = letter_image(letter, l.unsigned_abs() as usize - 1);
        if l > 0 {
            out.extend(img);
        } else {
            out.extend(invert(&img));
        }
    }
    reduce(out)
}

/// `β(x_k)`, applying the letters of `β` in order.
pub fn braid_action(letters: &[i64], k: usize) -> FreeWord {
    letters.iter().fold(vec![k as i32 + 1], |w, &l| substitute(&w, l))
}

/// Abelianized Fox derivatives `∂w/∂x_k` for every `k`, with `x_k ↦ t`.
fn fox_row(w: &[i32], gens: usize) -> Vec<Poly> {
    let mut row = vec![Poly::zero(); gens];
    let mut prefix_exp = 0i64;
    for &l in w {
        let k = l.unsigned_abs() as usize - 1;
        if l > 0 {
            row[k] = &row[k] + &Poly::from_ints(&[1]).shifted(prefix_exp);
            prefix_exp += 1;
        } else {
            prefix_exp -= 1;
            row[k] = &row[k] - &Poly::from_ints(&[1]).shifted(prefix_exp);
        }
    }
    row
}

/// Determinant by fraction-free elimination over `Q[t, t^-1]`.
pub fn det(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    let mut sign = Poly::one();
    let mut prev = Poly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Poly::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).unwrap().expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    &sign * &a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Alexander polynomial (monic gcd of maximal minors, zero if the module has
/// positive rank) of `⟨x_1..x_n | x_k = β(x_k) for every β⟩`.
pub fn alexander_polynomial(strands: usize, braids: &[Vec<i64>]) -> Poly {
    let mut rows = Vec::new();
    for b in braids {
        for k in 0..strands {
            let mut rel = braid_action(b, k);
            rel.push(-(k as i32 + 1));
            rows.push(fox_row(&reduce(rel), strands));
        }
    }
    // columns sum to zero after multiplying by (t - 1); drop the last one
    let cols = strands - 1;
    let mut g = Poly::zero();
    for pick in combinations(rows.len(), cols) {
        let minor: Vec<Vec<Poly>> = pick.iter().map(|&r| rows[r][..cols].to_vec()).collect();
        let d = det(minor);
        if !d.is_zero() {
            g = if g.is_zero() { d.monic() } else { g.gcd(&d).unwrap() };
            if g.span() == 0 {
                break;
            }
        }
    }
    g
}
