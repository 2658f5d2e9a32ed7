//! The graded Hopf algebra of graphs: comultiplication by vertex-subset
//! splitting, primitivity testing, and the projection onto the subspace of
//! primitive elements along the decomposable elements.
//!
//! The projection of a graph is the signed sum over unordered set partitions
//! V = V_1 ⊔ ... ⊔ V_m into nonempty blocks of (-1)^(m-1) (m-1)! times the
//! product of induced subgraphs. For the complete bipartite families the sum
//! collapses: blocks avoiding the small part contribute only a count, which
//! the alternating Stirling identity turns into a power of -a. Those
//! collapsed forms and the evaluated generating-function identities live
//! here too.

use std::collections::BTreeMap;

use num::traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{
    binomial, factorial, multinomial, rat_int, CasimirPoly, Rational, SeriesX,
};
use crate::graphs::{Graph, GraphError};

/// Bell(10) = 115975 partitions is where the generic sum stops.
pub const MAX_PROJECTION_VERTICES: usize = 10;
/// Subset enumeration bound for comultiplication.
pub const MAX_COMULT_VERTICES: usize = 10;
/// Primitivity testing bound (grade).
pub const MAX_PRIMITIVITY_GRADE: usize = 8;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("graph on {0} vertices exceeds the bound {1} for this operation")]
    SizeBound(usize, usize),
    #[error("combination is not homogeneous: grades {0} and {1} both present")]
    NonHomogeneous(usize, usize),
    #[error("part size l = {0} out of range {1}")]
    PartOutOfRange(usize, &'static str),
    #[error("truncation order {0} too small for l = {1}")]
    TruncationTooSmall(usize, usize),
    #[error("graph invariant: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A multiplicative graph invariant valued in polynomials in `c`.
pub trait GraphInvariant {
    fn value(&self, g: &Graph) -> Result<CasimirPoly, HopfError>;
}

/// Values of a multiplicative invariant on the complete bipartite family,
/// enough to drive the collapsed projection formulas.
pub trait BipartiteValues {
    fn value(&self, l: usize, n: usize) -> Result<CasimirPoly, HopfError>;
}

/// Finite rational-linear combination of graphs, collected by certificate.
/// Equality compares certificates and coefficients; the stored
/// representatives are arbitrary members of their isomorphism classes.
#[derive(Clone, Default, Debug)]
pub struct GraphCombo {
    terms: BTreeMap<Vec<u8>, (Graph, Rational)>,
}

impl PartialEq for GraphCombo {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((ca, (_, aa)), (cb, (_, ab)))| ca == cb && aa == ab)
    }
}

impl Eq for GraphCombo {}

impl GraphCombo {
    pub fn zero() -> Self {
        GraphCombo::default()
    }

    pub fn single(graph: Graph, coeff: Rational) -> Result<Self, HopfError> {
        let mut combo = GraphCombo::zero();
        combo.add_term(&graph, coeff)?;
        Ok(combo)
    }

    pub fn add_term(&mut self, graph: &Graph, coeff: Rational) -> Result<(), HopfError> {
        if coeff.is_zero() {
            return Ok(());
        }
        let cert = graph.certificate()?;
        match self.terms.get_mut(&cert) {
            Some((_, acc)) => {
                *acc += coeff;
                if acc.is_zero() {
                    self.terms.remove(&cert);
                }
            }
            None => {
                self.terms.insert(cert, (graph.clone(), coeff));
            }
        }
        Ok(())
    }

    pub fn add(&mut self, other: &GraphCombo) -> Result<(), HopfError> {
        for (g, a) in other.terms() {
            self.add_term(g, a.clone())?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Graph, &Rational)> {
        self.terms.values().map(|(g, a)| (g, a))
    }

    pub fn coeff_of(&self, graph: &Graph) -> Result<Rational, HopfError> {
        let cert = graph.certificate()?;
        Ok(self
            .terms
            .get(&cert)
            .map(|(_, a)| a.clone())
            .unwrap_or_else(Rational::zero))
    }

    /// The grade (vertex count) when homogeneous; an error names two grades
    /// otherwise. A zero combo is homogeneous of every grade.
    pub fn grade(&self) -> Result<Option<usize>, HopfError> {
        let mut grade = None;
        for (g, _) in self.terms() {
            match grade {
                None => grade = Some(g.vertex_count()),
                Some(k) if k != g.vertex_count() => {
                    return Err(HopfError::NonHomogeneous(k, g.vertex_count()))
                }
                _ => {}
            }
        }
        Ok(grade)
    }

    /// Applies a multiplicative invariant term by term.
    pub fn apply(&self, w: &dyn GraphInvariant) -> Result<CasimirPoly, HopfError> {
        let mut acc = CasimirPoly::zero();
        for (g, a) in self.terms() {
            let mut product = CasimirPoly::one();
            for comp in g.components() {
                product = &product * &w.value(&comp)?;
            }
            acc = &acc + &product.scale(a);
        }
        Ok(acc)
    }

    /// JSON list of `{graph: edge-list string, coeff: rational string}`.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms()
            .map(|(g, a)| {
                let coeff = if a.denom().is_one() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                };
                serde_json::json!({ "graph": g.to_string(), "coeff": coeff })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

/// Rational-linear combination of graph tensor pairs, collected by
/// certificate pairs. As with [`GraphCombo`], equality ignores the stored
/// representatives.
#[derive(Clone, Default, Debug)]
pub struct TensorCombo {
    terms: BTreeMap<CertPair, (Graph, Graph, Rational)>,
}

type CertPair = (Vec<u8>, Vec<u8>);

impl PartialEq for TensorCombo {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((ka, (_, _, aa)), (kb, (_, _, ab)))| ka == kb && aa == ab)
    }
}

impl Eq for TensorCombo {}

impl TensorCombo {
    pub fn zero() -> Self {
        TensorCombo::default()
    }

    pub fn add_term(
        &mut self,
        left: &Graph,
        right: &Graph,
        coeff: Rational,
    ) -> Result<(), HopfError> {
        if coeff.is_zero() {
            return Ok(());
        }
        let key = (left.certificate()?, right.certificate()?);
        match self.terms.get_mut(&key) {
            Some((_, _, acc)) => {
                *acc += coeff;
                if acc.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, (left.clone(), right.clone(), coeff));
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Graph, &Graph, &Rational)> {
        self.terms.values().map(|(l, r, a)| (l, r, a))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients.
    pub fn coefficient_mass(&self) -> Rational {
        self.terms().map(|(_, _, a)| a.clone()).sum()
    }
}

/// Comultiplication: sum over all vertex subsets U of G|_U ⊗ G|_(V\U).
pub fn comultiply(g: &Graph) -> Result<TensorCombo, HopfError> {
    let n = g.vertex_count();
    if n > MAX_COMULT_VERTICES {
        return Err(HopfError::SizeBound(n, MAX_COMULT_VERTICES));
    }
    let mut out = TensorCombo::zero();
    let full: u16 = (1 << n) - 1;
    for mask in 0..=full {
        let left = g.induced_mask(mask);
        let right = g.induced_mask(full & !mask);
        out.add_term(&left, &right, Rational::one())?;
    }
    Ok(out)
}

fn comultiply_combo(x: &GraphCombo) -> Result<TensorCombo, HopfError> {
    let mut out = TensorCombo::zero();
    for (g, a) in x.terms() {
        for (l, r, b) in comultiply(g)?.terms() {
            out.add_term(l, r, a * b)?;
        }
    }
    Ok(out)
}

/// Whether mu(x) = 1 ⊗ x + x ⊗ 1 for a homogeneous combination.
pub fn is_primitive(x: &GraphCombo) -> Result<bool, HopfError> {
    if let Some(grade) = x.grade()? {
        if grade > MAX_PRIMITIVITY_GRADE {
            return Err(HopfError::SizeBound(grade, MAX_PRIMITIVITY_GRADE));
        }
    }
    let mu = comultiply_combo(x)?;
    let unit = Graph::empty();
    let mut expect = TensorCombo::zero();
    for (g, a) in x.terms() {
        expect.add_term(&unit, g, a.clone())?;
        expect.add_term(g, &unit, a.clone())?;
    }
    Ok(mu == expect)
}

/// Calls `f` for every unordered set partition of {0, .., n-1} into
/// nonempty blocks.
pub fn for_each_set_partition(n: usize, f: &mut impl FnMut(&[Vec<usize>])) {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, f: &mut impl FnMut(&[Vec<usize>])) {
        if i == n {
            f(blocks);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, blocks, f);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, blocks, f);
        blocks.pop();
    }
    if n == 0 {
        return; // the empty vertex set has no partition into nonempty blocks
    }
    rec(0, n, &mut blocks, f);
}

fn partition_weight(m: usize) -> Rational {
    let sign = if (m - 1).is_multiple_of(2) { 1 } else { -1 };
    rat_int(sign) * Rational::from_integer(factorial(m - 1))
}

/// Projection onto primitive elements: the signed partition sum
/// sum over {V_1,..,V_m} of (-1)^(m-1) (m-1)! G|_(V_1) ... G|_(V_m).
pub fn project_primitive(g: &Graph) -> Result<GraphCombo, HopfError> {
    let n = g.vertex_count();
    if n > MAX_PROJECTION_VERTICES {
        return Err(HopfError::SizeBound(n, MAX_PROJECTION_VERTICES));
    }
    let mut combo = GraphCombo::zero();
    let mut failure = None;
    for_each_set_partition(n, &mut |blocks| {
        if failure.is_some() {
            return;
        }
        let mut product = Graph::empty();
        for block in blocks {
            let induced = g.induced(block).expect("block vertices in range");
            product = product.disjoint_union(&induced);
        }
        if let Err(e) = combo.add_term(&product, partition_weight(blocks.len())) {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(combo),
    }
}

/// The same partition sum with a multiplicative invariant substituted for
/// the graphs: equals `w` applied to [`project_primitive`].
pub fn project_eval(g: &Graph, w: &dyn GraphInvariant) -> Result<CasimirPoly, HopfError> {
    let n = g.vertex_count();
    if n > MAX_PROJECTION_VERTICES {
        return Err(HopfError::SizeBound(n, MAX_PROJECTION_VERTICES));
    }
    let mut acc = CasimirPoly::zero();
    let mut failure = None;
    for_each_set_partition(n, &mut |blocks| {
        if failure.is_some() {
            return;
        }
        let mut value = CasimirPoly::one();
        for block in blocks {
            let induced = g.induced(block).expect("block vertices in range");
            match w.value(&induced) {
                Ok(v) => value = &value * &v,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        acc = &acc + &value.scale(&partition_weight(blocks.len()));
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// Collapsed projection values for K_{l,n}, l in {1,2,3}: the partition sum
/// reduced by the alternating Stirling identity, so only the blocks meeting
/// the small part survive explicitly.
pub fn project_bipartite_eval(
    l: usize,
    n: usize,
    w: &dyn BipartiteValues,
) -> Result<CasimirPoly, HopfError> {
    let w0 = w.value(0, 1)?;
    let sign_pow = |base: i64, e: usize| -> Rational {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc *= rat_int(base);
        }
        acc
    };
    match l {
        1 => {
            // sum_i binom(n,i) (-1)^(n-i) w(K_{1,i}) w(K_{0,1})^(n-i)
            let mut acc = CasimirPoly::zero();
            for i in 0..=n {
                let coeff = Rational::from_integer(binomial(n, i)) * sign_pow(-1, n - i);
                let term = &w.value(1, i)? * &w0.pow(n - i);
                acc = &acc + &term.scale(&coeff);
            }
            Ok(acc)
        }
        2 => {
            // both selected vertices in one block, then in two blocks
            let mut acc = CasimirPoly::zero();
            for i in 0..=n {
                let coeff = Rational::from_integer(binomial(n, i)) * sign_pow(-1, n - i);
                let term = &w.value(2, i)? * &w0.pow(n - i);
                acc = &acc + &term.scale(&coeff);
            }
            for k in 0..=n {
                for i in 0..=k {
                    let coeff = Rational::from_integer(multinomial(n, &[i, k - i, n - k]))
                        * sign_pow(-2, n - k);
                    let term = &(&w.value(1, i)? * &w.value(1, k - i)?) * &w0.pow(n - k);
                    acc = &acc - &term.scale(&coeff);
                }
            }
            Ok(acc)
        }
        3 => {
            // one, two, or three blocks meeting the selected part
            let mut acc = CasimirPoly::zero();
            for k in 0..=n {
                let coeff = Rational::from_integer(binomial(n, k)) * sign_pow(-1, n - k);
                let term = &w.value(3, k)? * &w0.pow(n - k);
                acc = &acc + &term.scale(&coeff);
            }
            for k in 0..=n {
                for i in 0..=k {
                    let coeff = Rational::from_integer(multinomial(n, &[i, k - i, n - k]))
                        * sign_pow(-2, n - k)
                        * rat_int(3);
                    let term = &(&w.value(2, i)? * &w.value(1, k - i)?) * &w0.pow(n - k);
                    acc = &acc - &term.scale(&coeff);
                }
            }
            for k in 0..=n {
                for i in 0..=k {
                    for j in 0..=(k - i) {
                        let coeff =
                            Rational::from_integer(multinomial(n, &[i, j, k - i - j, n - k]))
                                * sign_pow(-3, n - k)
                                * rat_int(2);
                        let term = &(&(&w.value(1, i)? * &w.value(1, j)?)
                            * &w.value(1, k - i - j)?)
                            * &w0.pow(n - k);
                        acc = &acc + &term.scale(&coeff);
                    }
                }
            }
            Ok(acc)
        }
        _ => Err(HopfError::PartOutOfRange(l, "l in {1, 2, 3}")),
    }
}

/// Evaluated exponential generating function P_l for the projections,
/// l <= 3, built from the graph-family EGFs by the closed identities:
/// P_0 = w(K01) x, P_1 = K_1 E, P_2 = K_2 E - P_1^2,
/// P_3 = K_3 E - 3 P_2 P_1 - P_1^3, where E = exp(-w(K01) x) and
/// K_l = sum_n w(K_{l,n}) x^(n+l) / n!.
pub fn projection_egf(
    l: usize,
    w: &dyn BipartiteValues,
    n_trunc: usize,
) -> Result<SeriesX, HopfError> {
    if l > 3 {
        return Err(HopfError::PartOutOfRange(l, "l <= 3"));
    }
    if n_trunc < l {
        return Err(HopfError::TruncationTooSmall(n_trunc, l));
    }
    let w0 = w.value(0, 1)?;
    if l == 0 {
        return Ok(SeriesX::monomial(w0, 1, n_trunc));
    }
    let damping = SeriesX::exp_linear(&(-&w0), n_trunc);
    let family_egf = |part: usize| -> Result<SeriesX, HopfError> {
        let mut coeffs = Vec::with_capacity(n_trunc + 1);
        for k in 0..=n_trunc {
            if k < part {
                coeffs.push(CasimirPoly::zero());
            } else {
                let n = k - part;
                let inv_fact = Rational::new(1.into(), factorial(n));
                coeffs.push(w.value(part, n)?.scale(&inv_fact));
            }
        }
        Ok(SeriesX::from_fn(n_trunc, |k| coeffs[k].clone()))
    };
    let p1 = family_egf(1)?.mul(&damping);
    if l == 1 {
        return Ok(p1);
    }
    let p2 = family_egf(2)?.mul(&damping).sub(&p1.pow(2));
    if l == 2 {
        return Ok(p2);
    }
    let p3 = family_egf(3)?
        .mul(&damping)
        .sub(&p2.mul(&p1).scale(&CasimirPoly::from_ints(&[3])))
        .sub(&p1.pow(3));
    Ok(p3)
}
