//! Polynomials over a field: formatting and roots lying in the field itself.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, FieldElement, FieldSpec};

/// Evaluates a polynomial given low-degree-first.
pub fn eval_poly(coeffs: &[FieldElement], x: &FieldElement) -> FieldElement {
    let mut acc = x.field().zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Renders a polynomial in `x`, highest degree first, e.g. `x^2 + (-2)`.
pub fn format_poly(coeffs: &[FieldElement]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let coeff = c.to_string();
        let simple = !coeff.contains(' ') && !coeff[1..].contains('-');
        let term = if k == 0 {
            if simple {
                coeff
            } else {
                format!("({coeff})")
            }
        } else if c.is_one() {
            mono
        } else if simple {
            format!("{coeff}*{mono}")
        } else {
            format!("({coeff})*{mono}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// All roots of `coeffs` (low degree first, nonzero) that lie in the field.
///
/// Prime fields are searched exhaustively.  For cyclotomic fields, candidate
/// roots are located numerically in every complex embedding, reconstructed as
/// rational power-basis coordinates and kept only if they are exact roots, so
/// every returned value is verified.  Roots are returned sorted and distinct.
pub fn roots_in_field(field: &Field, coeffs: &[FieldElement]) -> Vec<FieldElement> {
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last().unwrap().is_zero() {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = match field.spec() {
        FieldSpec::Prime(p) => {
            let limit = p.min(1 << 20);
            (0..limit).map(|v| field.from_i64(v as i64)).filter(|x| eval_poly(&c, x).is_zero()).collect()
        }
        FieldSpec::Cyclotomic(n) => cyclotomic_roots(field, n, &c),
    };
    roots.sort();
    roots.dedup();
    roots
}

fn cyclotomic_roots(field: &Field, n: u32, c: &[FieldElement]) -> Vec<FieldElement> {
    let deg = field.degree();
    let reps: Vec<u32> = (1..=n.max(1)).filter(|&k| k.gcd(&n) == 1 && 2 * k <= n.max(2)).collect();
    let reps = if reps.is_empty() { vec![1] } else { reps };
    let complex_roots: Vec<Vec<Complex64>> = reps
        .iter()
        .map(|&k| {
            let cc: Vec<Complex64> = c.iter().map(|x| field.embed(x, k)).collect();
            complex_poly_roots(&cc)
        })
        .collect();
    let mut found = Vec::new();
    let total: usize = complex_roots.iter().map(|r| r.len().max(1)).product();
    if total > 200_000 {
        return found;
    }
    let mut choice = vec![0usize; reps.len()];
    loop {
        if let Some(x) = reconstruct(field, n, deg, &reps, &complex_roots, &choice) {
            if eval_poly(c, &x).is_zero() {
                found.push(x);
            }
        }
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == choice.len() {
                return found;
            }
            choice[i] += 1;
            if choice[i] < complex_roots[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn reconstruct(
    field: &Field,
    n: u32,
    deg: usize,
    reps: &[u32],
    roots: &[Vec<Complex64>],
    choice: &[usize],
) -> Option<FieldElement> {
    // Real linear system in the power-basis coordinates.
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, &k) in reps.iter().enumerate() {
        let r = *roots[idx].get(choice[idx])?;
        let ang = |j: usize| 2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / (n as f64);
        let mut re: Vec<f64> = (0..deg).map(|j| ang(j).cos()).collect();
        re.push(r.re);
        rows.push(re);
        if rows.len() < deg {
            let mut im: Vec<f64> = (0..deg).map(|j| ang(j).sin()).collect();
            im.push(r.im);
            rows.push(im);
        }
    }
    let sol = solve_real(rows, deg)?;
    let coeffs: Option<Vec<BigRational>> = sol.iter().map(|&v| rational_approx(v)).collect();
    Some(field.from_poly(coeffs?))
}

fn solve_real(mut m: Vec<Vec<f64>>, n: usize) -> Option<Vec<f64>> {
    if m.len() < n {
        return None;
    }
    m.truncate(n);
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                for c in col..=n {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n] / m[i][i]).collect())
}

/// Best rational approximation with denominator at most 10^6, if it is close.
fn rational_approx(x: f64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > 1_000_000 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 || frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 || (x - h1 as f64 / k1 as f64).abs() > 1e-6 {
        return None;
    }
    Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

/// Complex roots by Aberth iteration followed by Newton polishing.
fn complex_poly_roots(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for a in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let radius = 1.0 + monic[..d].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|i| Complex64::from_polar(radius * 0.5 + 0.1, 0.4 + 2.0 * std::f64::consts::PI * i as f64 / d as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| Complex64::one() / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::one() - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm());
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let (p, dp) = eval(*zi);
            if dp.norm() > 0.0 {
                let step = p / dp;
                if step.is_finite() {
                    *zi -= step;
                }
            }
        }
    }
    z
}
