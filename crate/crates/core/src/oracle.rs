//! Faithful representations used as independent equality oracles.
//!
//! `L(LINE_n) ≅ M_n(K)` via `v_i ↦ E_ii`, `e_i ↦ E_{i,i+1}`, `e_i* ↦ E_{i+1,i}`,
//! and `L(LOOP) ≅ K[x, x⁻¹]`. Both maps are evaluated generator by generator,
//! so they do not depend on the canonical form chosen by the engine.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::algebra::Element;
use crate::error::AlgebraError;
use crate::graph::named;
use crate::scalar::{Field, Scalar};

/// A dense square matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, n: usize) -> Matrix {
        Matrix {
            n,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// The matrix unit `E_ij` (0-based).
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(field, n);
        m.entries[i * n + j] = field.one();
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.get(i, 0) * rhs.get(0, j);
                for k in 1..n {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                out.push(acc);
            }
        }
        Matrix { n, entries: out }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Image of an element of `L(LINE_n)` in `M_n(K)`.
pub fn matrix_rep(n: usize, a: &Element) -> Result<Matrix, AlgebraError> {
    let g = a.graph();
    if n == 0 || *g != named::line(n) {
        return Err(AlgebraError::WrongGraph(format!("LINE_{n}")));
    }
    let field = a.algebra().field();
    // Ids sort as strings (v10 < v2), so read the position from the name.
    let num = |v| -> usize {
        g.vertex_name(v)[1..]
            .parse::<usize>()
            .expect("line vertices are named v<k>")
            - 1
    };
    let mut total = Matrix::zero(field, n);
    for (m, c) in a.terms() {
        let s = num(m.left_vertex());
        let mut image = Matrix::unit(field, n, s, s);
        for &e in m.real().edges() {
            image = &image * &Matrix::unit(field, n, num(g.source(e)), num(g.range(e)));
        }
        for &e in m.ghost().edges().iter().rev() {
            image = &image * &Matrix::unit(field, n, num(g.range(e)), num(g.source(e)));
        }
        total = &total + &image.scale(c);
    }
    Ok(total)
}

/// A Laurent polynomial: exponent → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    field: Field,
    coeffs: BTreeMap<i64, Scalar>,
}

impl Laurent {
    pub fn zero(field: Field) -> Laurent {
        Laurent {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    /// `Σ c_k x^k` from `(k, c_k)` pairs.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (i64, i64)>) -> Laurent {
        let mut out = Laurent::zero(field);
        for (k, c) in terms {
            out.add_term(k, &field.int(c));
        }
        out
    }

    pub fn monomial(field: Field, k: i64, c: Scalar) -> Laurent {
        let mut out = Laurent::zero(field);
        out.add_term(k, &c);
        out
    }

    fn add_term(&mut self, k: i64, c: &Scalar) {
        let entry = self.coeffs.entry(k).or_insert_with(|| self.field.zero());
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The quotient `h` with `g = self · h`, if one exists.
    pub fn divide(&self, g: &Laurent) -> Result<Option<Laurent>, AlgebraError> {
        let (Some(f_lo), Some(f_hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Err(AlgebraError::DivisionByZero);
        };
        let (Some(g_lo), Some(g_hi)) = (g.min_exponent(), g.max_exponent()) else {
            return Ok(Some(Laurent::zero(self.field)));
        };
        // Powers of x are units: divide the shifted polynomials f/x^f_lo and g/x^g_lo.
        let dense = |p: &Laurent, lo: i64, hi: i64| -> Vec<Scalar> {
            (lo..=hi)
                .map(|k| p.coeffs.get(&k).cloned().unwrap_or_else(|| p.field.zero()))
                .collect()
        };
        let f = dense(self, f_lo, f_hi);
        let mut rem = dense(g, g_lo, g_hi);
        if rem.len() < f.len() {
            return Ok(None);
        }
        let lead_inv = f.last().expect("nonzero").inv()?;
        let mut quot = vec![self.field.zero(); rem.len() - f.len() + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + f.len() - 1] * &lead_inv;
            if top.is_zero() {
                continue;
            }
            for (i, fi) in f.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&top * fi);
            }
            quot[shift] = top;
        }
        if !rem.iter().all(Scalar::is_zero) {
            return Ok(None);
        }
        let mut h = Laurent::zero(self.field);
        for (i, c) in quot.iter().enumerate() {
            h.add_term(g_lo - f_lo + i as i64, c);
        }
        Ok(Some(h))
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero(self.field);
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                let var = match k {
                    0 => String::new(),
                    1 => "x".to_string(),
                    k => format!("x^{k}"),
                };
                match (var.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => var,
                    (false, false) => format!("{c} {var}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Image of an element of `L(LOOP)` in `K[x, x⁻¹]`: `x^k (x^m)* ↦ x^{k−m}`.
pub fn laurent_rep(a: &Element) -> Result<Laurent, AlgebraError> {
    let g = a.graph();
    let is_loop = g.vertex_count() == 1 && g.edge_count() == 1;
    if !is_loop {
        return Err(AlgebraError::WrongGraph("LOOP".into()));
    }
    let field = a.algebra().field();
    let mut out = Laurent::zero(field);
    for (m, c) in a.terms() {
        out.add_term(m.real().len() as i64 - m.ghost().len() as i64, c);
    }
    Ok(out)
}

/// Whether `f` divides `g` in `K[x, x⁻¹]`.
pub fn laurent_divides(f: &Laurent, g: &Laurent) -> Result<bool, AlgebraError> {
    Ok(f.divide(g)?.is_some())
}
