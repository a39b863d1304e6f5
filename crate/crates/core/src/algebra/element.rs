use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{LeavittAlgebra, Monomial};
use crate::error::AlgebraError;
use crate::graph::{Graph, VertexId};
use crate::scalar::Scalar;

/// An element of `L(E)` in canonical form: a map from canonical monomials to
/// nonzero coefficients. The zero element is the empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    alg: Arc<LeavittAlgebra>,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Homogeneous components by degree `|p| − |q|`.
pub type GradedDecomposition = BTreeMap<i64, Element>;

#[allow(clippy::len_without_is_empty)]
impl Element {
    pub(crate) fn from_terms(alg: Arc<LeavittAlgebra>, terms: BTreeMap<Monomial, Scalar>) -> Element {
        debug_assert!(terms.iter().all(|(m, c)| !c.is_zero() && !alg.is_reducible(m)));
        Element { alg, terms }
    }

    pub fn algebra(&self) -> &Arc<LeavittAlgebra> {
        &self.alg
    }

    pub fn graph(&self) -> &Graph {
        self.alg.graph()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch)
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(x) => {
                    *x = &*x + c;
                    if x.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(Element::from_terms(self.alg.clone(), terms))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let raw = self.terms.iter().flat_map(|(m1, c1)| {
            other
                .terms
                .iter()
                .filter_map(move |(m2, c2)| m1.mul(m2).map(|m| (m, c1 * c2)))
        });
        Ok(self.alg.normalize_terms(raw))
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        assert_eq!(k.field(), self.alg.field(), "scalar from a different field");
        if k.is_zero() {
            return self.alg.zero();
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        Element::from_terms(self.alg.clone(), terms)
    }

    pub fn pow(&self, n: u32) -> Element {
        (0..n).fold(self.alg.one(), |acc, _| &acc * self)
    }

    /// The involution `c·pq* ↦ c·qp*`. The special-edge junction condition is
    /// symmetric in `p` and `q`, so the image is already canonical.
    pub fn involution(&self) -> Element {
        let terms = self.terms.iter().map(|(m, c)| (m.adjoint(), c.clone())).collect();
        Element::from_terms(self.alg.clone(), terms)
    }

    pub fn graded_components(&self) -> GradedDecomposition {
        let mut parts: BTreeMap<i64, BTreeMap<Monomial, Scalar>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(m.degree()).or_default().insert(m.clone(), c.clone());
        }
        parts
            .into_iter()
            .map(|(n, terms)| (n, Element::from_terms(self.alg.clone(), terms)))
            .collect()
    }

    /// The degree-`n` homogeneous component (possibly zero).
    pub fn component(&self, n: i64) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == n)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Element::from_terms(self.alg.clone(), terms)
    }

    /// Maximum of `|p| + |q|` over the canonical monomials.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::total_len).max()
    }

    /// Maximum `|p|` over the canonical monomials.
    pub fn real_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.real().len()).max()
    }

    /// Maximum `|q|` over the canonical monomials.
    pub fn ghost_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.ghost().len()).max()
    }

    /// All ghost parts trivial.
    pub fn is_real_only(&self) -> bool {
        self.terms.keys().all(|m| m.ghost().is_trivial())
    }

    /// All real parts trivial.
    pub fn is_ghost_only(&self) -> bool {
        self.terms.keys().all(|m| m.real().is_trivial())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// Coefficients of the vertex monomials.
    pub fn vertex_terms(&self) -> impl Iterator<Item = (VertexId, &Scalar)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_vertex())
            .map(|(m, c)| (m.left_vertex(), c))
    }

    /// Vertices `s(p)` and `s(q)` over all monomials.
    pub fn support_vertices(&self) -> BTreeSet<VertexId> {
        self.terms
            .keys()
            .flat_map(|m| [m.left_vertex(), m.right_vertex()])
            .collect()
    }

    /// If the element is exactly `1·v` for a vertex `v`, returns `v`.
    pub fn as_vertex(&self) -> Option<VertexId> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.is_vertex() && c.is_one() => Some(m.left_vertex()),
            _ => None,
        }
    }
}

/// A sum of vertices acting as a two-sided identity on every item.
pub fn local_unit(items: &[Element]) -> Result<Element, AlgebraError> {
    let first = items.first().ok_or(AlgebraError::EmptyList)?;
    let alg = first.algebra();
    let mut vs = BTreeSet::new();
    for a in items {
        first.check(a)?;
        vs.extend(a.support_vertices());
    }
    let terms = vs
        .into_iter()
        .map(|v| (Monomial::vertex(v), alg.field().one()))
        .collect();
    Ok(Element::from_terms(alg.clone(), terms))
}

impl LeavittAlgebra {
    /// Textual form of a monomial: real edges then reversed ghost edges,
    /// joined by `.`; a vertex monomial prints as the vertex id.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let g = self.graph();
        if m.is_vertex() {
            return g.vertex_name(m.left_vertex()).to_string();
        }
        let real = m.real().edges().iter().map(|&e| g.edge_name(e).to_string());
        let ghost = m
            .ghost()
            .edges()
            .iter()
            .rev()
            .map(|&e| format!("{}*", g.edge_name(e)));
        real.chain(ghost).collect::<Vec<_>>().join(".")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = self.alg.format_monomial(m);
            let (sep, k) = if i > 0 && c.is_negative() {
                (" - ", c.abs())
            } else {
                (" + ", c.clone())
            };
            if i > 0 {
                f.write_str(sep)?;
            }
            if k.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{k} {mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("elements of the same algebra")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("elements of the same algebra")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("elements of the same algebra")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Element::from_terms(self.alg.clone(), terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::scalar::Field;

    fn setup(g: Graph, field: Field) -> (Arc<LeavittAlgebra>, impl Fn(&str) -> Element) {
        let a = LeavittAlgebra::new(g, field);
        let b = a.clone();
        let gen = move |s: &str| {
            let g = b.graph();
            if let Some(name) = s.strip_suffix('*') {
                b.ghost(g.edge(name).unwrap())
            } else if let Some(v) = g.vertex(s) {
                b.vertex(v)
            } else {
                b.edge(g.edge(s).unwrap())
            }
        };
        (a, gen)
    }

    #[test]
    fn addition() {
        let (a, g) = setup(lp(), Field::Rationals);
        let v = g("v");
        assert!((&v + &(-&v)).is_zero());
        let x = g("x");
        assert_eq!(&x + &x, x.scale(&Field::Rationals.int(2)));
        let (_, g2) = setup(lp(), Field::prime(2).unwrap());
        let x2 = g2("x");
        assert!((&x2 + &x2).is_zero());
        assert_eq!(x.checked_add(&x2), Err(AlgebraError::Mismatch));
        let (_, other) = setup(rose(1), Field::Rationals);
        assert_eq!(x.checked_mul(&other("y1")), Err(AlgebraError::Mismatch));
        assert!(a.zero().is_zero());
    }

    #[test]
    fn ck1_products() {
        let (_, g) = setup(lp(), Field::Rationals);
        assert_eq!(&g("x*") * &g("x"), g("v"));
        assert_eq!(&g("x") * &g("x*"), g("v"));
        let (_, g) = setup(rose(2), Field::Rationals);
        assert!((&g("y1*") * &g("y2")).is_zero());
        let (_, g) = setup(line(3), Field::Rationals);
        assert!((&g("e2") * &g("e1")).is_zero());
        assert_eq!((&g("e1") * &g("e2")).to_string(), "e1.e2");
    }

    #[test]
    fn involution_examples() {
        let (_, g) = setup(line(3), Field::Rationals);
        let e12 = &g("e1") * &g("e2");
        let bar = e12.involution();
        assert_eq!(bar, &g("e2*") * &g("e1*"));
        assert_eq!(bar.to_string(), "e2*.e1*");
        assert_eq!(g("v2").involution(), g("v2"));
        let (_, g) = setup(lp(), Field::Rationals);
        let q = Field::Rationals;
        let a = &g("x").scale(&q.int(2)) + &g("x*").scale(&q.int(3));
        let b = &g("x*").scale(&q.int(2)) + &g("x").scale(&q.int(3));
        assert_eq!(a.involution(), b);
    }

    #[test]
    fn grading() {
        let (_, g) = setup(lp(), Field::Rationals);
        let a = &(&g("v") + &g("x")) + &g("x*");
        let parts = a.graded_components();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), [-1, 0, 1]);
        assert_eq!(parts[&-1], g("x*"));
        assert_eq!(parts[&0], g("v"));
        assert_eq!(parts[&1], g("x"));
        assert_eq!(g("v").graded_components().len(), 1);
        let (_, g) = setup(line(3), Field::Rationals);
        let e12 = &g("e1") * &g("e2");
        let parts = e12.graded_components();
        assert_eq!(parts[&2], e12);
        assert_eq!(e12.degree(), Some(2));
        assert_eq!(e12.real_degree(), Some(2));
        assert_eq!(e12.involution().ghost_degree(), Some(2));
    }

    #[test]
    fn local_units() {
        let (a, g) = setup(line(3), Field::Rationals);
        let e1 = g("e1");
        let u = local_unit(std::slice::from_ref(&e1)).unwrap();
        assert_eq!(u, &g("v1") + &g("v2"));
        assert_eq!(&u * &e1, e1);
        assert_eq!(&e1 * &u, e1);
        assert_eq!(&u * &u, u);
        assert_eq!(local_unit(&[]), Err(AlgebraError::EmptyList));
        let one = a.one();
        for s in ["v1", "e1", "e2*", "v3"] {
            assert_eq!(&one * &g(s), g(s));
            assert_eq!(&g(s) * &one, g(s));
        }
        let (_, g) = setup(lp(), Field::Rationals);
        assert_eq!(local_unit(&[&g("x") + &g("v")]).unwrap(), g("v"));
    }

    #[test]
    fn ck2_identity() {
        let (_, g) = setup(rose(3), Field::Rationals);
        let sum = ["y1", "y2", "y3"]
            .iter()
            .map(|y| &g(y) * &g(&format!("{y}*")))
            .fold(g("v").scale(&Field::Rationals.int(0)), |a, b| &a + &b);
        assert_eq!(sum, g("v"));
    }

    #[test]
    fn display_signs_and_fractions() {
        let (_, g) = setup(lp(), Field::Rationals);
        let q = Field::Rationals;
        let a = &g("v").scale(&q.int(-1)) + &g("x").scale(&q.ratio(-3, 2).unwrap());
        assert_eq!(a.to_string(), "-1 v - 3/2 x");
        let a = &g("x*") + &(&g("x") * &g("x"));
        assert_eq!(a.to_string(), "x* + x.x");
        let (_, g) = setup(lp(), Field::prime(5).unwrap());
        assert_eq!((-&g("x")).to_string(), "4 x");
    }
}
