//! Complete collineation chains, determinantal stratum indexing, Petri
//! forms of affine matrix families, and fiber-level kernel/cokernel duality.
//!
//! A complete collineation from `V0` to `V1` is a sequence of non-zero maps
//! `ρ1 : V0 → V1`, `ρ_{i+1} : ker ρ_i → coker ρ_i`, stopping exactly when a
//! kernel or cokernel vanishes; the last map is surjective when
//! `χ = dim V0 - dim V1 >= 0` and injective when `χ <= 0`. Kernels carry
//! their echelon null-space bases and cokernels are coordinatized on the
//! non-pivot rows of the column space, so duality statements are
//! exact-equality testable.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::scalar::FieldScalar;

use rand::Rng;
use std::fmt;

/// A chain `ρ1, ρ2, …` of exact matrices in the canonical bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollineationChain<T> {
    pub dim_v0: usize,
    pub dim_v1: usize,
    pub maps: Vec<Matrix<T>>,
}

/// Outcome of [`validate`]: the first violated rule, if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainDiagnostics {
    pub valid: bool,
    pub first_violation: Option<String>,
}

impl ChainDiagnostics {
    fn ok() -> Self {
        ChainDiagnostics {
            valid: true,
            first_violation: None,
        }
    }

    fn fail(msg: String) -> Self {
        ChainDiagnostics {
            valid: false,
            first_violation: Some(msg),
        }
    }
}

impl<T: FieldScalar> CollineationChain<T> {
    pub fn new(dim_v0: usize, dim_v1: usize, maps: Vec<Matrix<T>>) -> Self {
        CollineationChain {
            dim_v0,
            dim_v1,
            maps,
        }
    }

    /// `χ = dim V0 - dim V1`; invariant along the chain.
    pub fn chi(&self) -> i64 {
        self.dim_v0 as i64 - self.dim_v1 as i64
    }

    /// Checks every chain rule; diagnostics name the first violated one.
    pub fn validate(&self) -> ChainDiagnostics {
        if self.maps.is_empty() {
            return if self.dim_v0 == 0 || self.dim_v1 == 0 {
                ChainDiagnostics::ok()
            } else {
                ChainDiagnostics::fail("empty chain between non-zero spaces".into())
            };
        }
        if self.dim_v0 == 0 || self.dim_v1 == 0 {
            return ChainDiagnostics::fail(
                "chain must be empty when a side vanishes".into(),
            );
        }
        let chi = self.chi();
        let mut dom = self.dim_v0;
        let mut cod = self.dim_v1;
        let last = self.maps.len() - 1;
        for (i, map) in self.maps.iter().enumerate() {
            if map.rows() != cod || map.cols() != dom {
                return ChainDiagnostics::fail(format!(
                    "map {} has shape {}x{}, expected {}x{}",
                    i + 1,
                    map.rows(),
                    map.cols(),
                    cod,
                    dom
                ));
            }
            let rank = map.rank();
            let nullity = dom - rank;
            let conullity = cod - rank;
            if i == last {
                if chi > 0 && conullity != 0 {
                    return ChainDiagnostics::fail("last map not surjective".into());
                }
                if chi < 0 && nullity != 0 {
                    return ChainDiagnostics::fail("last map not injective".into());
                }
                if chi == 0 && (nullity != 0 || conullity != 0) {
                    return ChainDiagnostics::fail("last map not bijective".into());
                }
            } else {
                if map.is_zero() {
                    return ChainDiagnostics::fail(format!("map {} is zero", i + 1));
                }
                if nullity == 0 || conullity == 0 {
                    return ChainDiagnostics::fail(format!(
                        "map {} is full rank but the chain continues",
                        i + 1
                    ));
                }
            }
            if map.is_zero() {
                return ChainDiagnostics::fail(format!("map {} is zero", i + 1));
            }
            dom = nullity;
            cod = conullity;
        }
        ChainDiagnostics::ok()
    }

    /// The dual chain `ρ1ᵀ, ρ2ᵀ, …` from `V1*` to `V0*`. Rejects invalid
    /// chains; on valid ones the result is valid with the surjective and
    /// injective ends exchanged, and transposing twice is the identity.
    pub fn transpose_chain(&self) -> Result<CollineationChain<T>> {
        let diag = self.validate();
        if !diag.valid {
            return Err(Error::InvalidChain(
                diag.first_violation.unwrap_or_default(),
            ));
        }
        Ok(CollineationChain {
            dim_v0: self.dim_v1,
            dim_v1: self.dim_v0,
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        })
    }
}

impl<T: FieldScalar> fmt::Display for CollineationChain<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chain {}→{} with {} map(s)",
            self.dim_v0,
            self.dim_v1,
            self.maps.len()
        )
    }
}

/// Completes a non-zero first map to a valid chain by drawing each
/// successive map uniformly from integer matrices with entries in
/// `[-2, 2]`, resampling zero draws. Test helper.
pub fn greedy_complete<T: FieldScalar>(
    rho1: Matrix<T>,
    rng: &mut impl Rng,
) -> CollineationChain<T> {
    let dim_v0 = rho1.cols();
    let dim_v1 = rho1.rows();
    let mut dom = dim_v0 - rho1.rank();
    let mut cod = dim_v1 - rho1.rank();
    let mut maps = vec![rho1];
    while dom > 0 && cod > 0 {
        let next = loop {
            let candidate = Matrix::from_fn(cod, dom, |_, _| {
                T::from_i64(rng.gen_range(-2..=2)).unwrap()
            });
            if !candidate.is_zero() {
                break candidate;
            }
        };
        let rank = next.rank();
        dom -= rank;
        cod -= rank;
        maps.push(next);
    }
    CollineationChain {
        dim_v0,
        dim_v1,
        maps,
    }
}

/// Determinantal stratum index of `[e] ∈ P Hom(V0, V1)`:
/// `min(nullity e, nullity eᵀ)`.
pub fn stratum_index<T: FieldScalar>(e: &Matrix<T>) -> usize {
    let rank = e.rank();
    (e.cols() - rank).min(e.rows() - rank)
}

/// Kernel and cokernel of a matrix in the canonical coordinates: the
/// echelon null-space basis, the quotient coordinates on the non-pivot rows
/// of the column space, and unit-vector representatives of those classes.
pub struct KerCokerData<T> {
    /// Columns form the canonical kernel basis (`cols x nullity`).
    pub kernel: Matrix<T>,
    /// Cokernel coordinates (`conullity x rows`); kills the column space.
    pub coker_proj: Matrix<T>,
    /// Representatives of the cokernel basis classes (`rows x conullity`);
    /// `coker_proj · coker_reps` is the identity.
    pub coker_reps: Matrix<T>,
}

/// Computes the canonical kernel/cokernel package of `e`.
pub fn ker_coker_data<T: FieldScalar>(e: &Matrix<T>) -> KerCokerData<T> {
    let kernel = e.kernel_basis();
    let (col_basis, _) = e.column_space_basis();
    let column_space = Subspace::from_span(&col_basis);
    let coker_proj = column_space.quotient_projection();
    let free = column_space.non_pivots();
    let mut coker_reps = Matrix::zero(e.rows(), free.len());
    for (b, &j) in free.iter().enumerate() {
        coker_reps[(j, b)] = T::one();
    }
    KerCokerData {
        kernel,
        coker_proj,
        coker_reps,
    }
}

/// Fiber-level kernel/cokernel duality: `dim ker eᵀ = dim coker e`,
/// `dim coker eᵀ = dim ker e`, and the canonical pairings
/// `coker(e) × ker(eᵀ)` and `coker(eᵀ) × ker(e)` are nondegenerate.
pub fn ker_coker_duality<T: FieldScalar>(e: &Matrix<T>) -> bool {
    let et = e.transpose();
    let rank = e.rank();
    let (nullity, conullity) = (e.cols() - rank, e.rows() - rank);
    let data = ker_coker_data(e);
    let data_t = ker_coker_data(&et);
    // dim ker(eᵀ) = dim coker(e) and dim coker(eᵀ) = dim ker(e)
    if data_t.kernel.cols() != conullity || data_t.coker_proj.rows() != nullity {
        return false;
    }
    // pairing coker(e) x ker(eᵀ): evaluate dual kernel vectors on class reps
    let pairing1 = data_t.kernel.transpose().mul(&data.coker_reps);
    // pairing coker(eᵀ) x ker(e)
    let pairing2 = data.kernel.transpose().mul(&data_t.coker_reps);
    pairing1.rank() == conullity && pairing2.rank() == nullity
}

/// An affine family of matrices `e(x) = e0 + Σ x_i·e_i` over a
/// `p`-dimensional base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixFamily<T> {
    pub constant: Matrix<T>,
    pub directions: Vec<Matrix<T>>,
}

impl<T: FieldScalar> MatrixFamily<T> {
    pub fn new(constant: Matrix<T>, directions: Vec<Matrix<T>>) -> Result<Self> {
        let (r, c) = (constant.rows(), constant.cols());
        if directions.iter().any(|d| d.rows() != r || d.cols() != c) {
            return Err(Error::ShapeMismatch(
                "all family terms must share a shape".into(),
            ));
        }
        Ok(MatrixFamily {
            constant,
            directions,
        })
    }

    /// The family over the space of all matrices of a given shape, with one
    /// coordinate direction per entry (row-major).
    pub fn universal(rows: usize, cols: usize) -> Self {
        let mut directions = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let mut m = Matrix::zero(rows, cols);
                m[(r, c)] = T::one();
                directions.push(m);
            }
        }
        MatrixFamily {
            constant: Matrix::zero(rows, cols),
            directions,
        }
    }

    pub fn base_dim(&self) -> usize {
        self.directions.len()
    }

    pub fn eval(&self, x: &[T]) -> Matrix<T> {
        assert_eq!(x.len(), self.base_dim());
        let mut acc = self.constant.clone();
        for (xi, ei) in x.iter().zip(&self.directions) {
            if !xi.is_zero() {
                acc = acc.add(&ei.scale(xi));
            }
        }
        acc
    }

    /// Directional derivative `D_ξ e = Σ ξ_i·e_i`; exact for affine
    /// families, equal to any one-step difference quotient.
    pub fn directional_derivative(&self, xi: &[T]) -> Matrix<T> {
        assert_eq!(xi.len(), self.base_dim());
        let mut acc = Matrix::zero(self.constant.rows(), self.constant.cols());
        for (c, ei) in xi.iter().zip(&self.directions) {
            if !c.is_zero() {
                acc = acc.add(&ei.scale(c));
            }
        }
        acc
    }

    /// The transposed family `eᵀ(x) = e0ᵀ + Σ x_i·e_iᵀ`.
    pub fn transposed(&self) -> Self {
        MatrixFamily {
            constant: self.constant.transpose(),
            directions: self.directions.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// The Petri form of a family at a point: for each base direction the
/// matrix of `f ↦ [D_ξ e(f)] ∈ coker` restricted to the kernel, in the
/// canonical bases. Measures the first-order obstruction to extending
/// kernel elements along the direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PetriForm<T> {
    pub kernel_dim: usize,
    pub coker_dim: usize,
    /// One `coker_dim x kernel_dim` block per base direction.
    pub blocks: Vec<Matrix<T>>,
}

impl<T: FieldScalar> PetriForm<T> {
    /// Rank of the induced linear map from the base tangent space to
    /// `Hom(ker, coker)`.
    pub fn rank(&self) -> usize {
        let width = self.kernel_dim * self.coker_dim;
        let flat = Matrix::from_fn(self.blocks.len(), width, |i, j| {
            self.blocks[i][(j / self.kernel_dim, j % self.kernel_dim)].clone()
        });
        flat.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }
}

/// Computes the Petri form of `f` at `x0`, requiring `e(x0)` to have corank
/// exactly `t` (cokernel dimension `t`).
pub fn petri_form<T: FieldScalar>(
    family: &MatrixFamily<T>,
    x0: &[T],
    t: usize,
) -> Result<PetriForm<T>> {
    let e0 = family.eval(x0);
    let corank = e0.rows() - e0.rank();
    if corank != t {
        return Err(Error::Precondition(format!(
            "corank at the base point is {corank}, expected {t}"
        )));
    }
    let data = ker_coker_data(&e0);
    let blocks = family
        .directions
        .iter()
        .map(|ei| data.coker_proj.mul(ei).mul(&data.kernel))
        .collect();
    Ok(PetriForm {
        kernel_dim: data.kernel.cols(),
        coker_dim: corank,
        blocks,
    })
}

/// Computes the Petri forms of `f` and of the transposed family at the same
/// point and compares them under the canonical identifications
/// `ker(eᵀ) ≅ coker(e)*` and `coker(eᵀ) ≅ ker(e)*`: both must produce the
/// raw pairing tensor `⟨k', D_ξ e · k⟩` exactly.
pub fn petri_dual_agreement<T: FieldScalar>(
    family: &MatrixFamily<T>,
    x0: &[T],
) -> Result<bool> {
    let e0 = family.eval(x0);
    let t = e0.rows() - e0.rank();
    let form = petri_form(family, x0, t)?;
    let dual_family = family.transposed();
    let et0 = dual_family.eval(x0);
    let t_dual = et0.rows() - et0.rank();
    let dual_form = petri_form(&dual_family, x0, t_dual)?;

    let data = ker_coker_data(&e0);
    let data_t = ker_coker_data(&et0);
    // pairing of coker(e) classes with ker(eᵀ) functionals
    let pairing1 = data_t.kernel.transpose().mul(&data.coker_reps);
    // pairing of coker(eᵀ) classes with ker(e) vectors
    let pairing0 = data_t.coker_reps.transpose().mul(&data.kernel);
    for (b1, b2) in form.blocks.iter().zip(&dual_form.blocks) {
        let via_form = pairing1.mul(b1);
        let via_dual = b2.transpose().mul(&pairing0);
        if via_form != via_dual {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Expected codimension `t(r0 - r1 + t)` of the corank-`t` locus of a
/// generically surjective family of `r1 x r0` matrices.
pub fn expected_codim(r0: usize, r1: usize, t: usize) -> Result<usize> {
    if r1 > r0 {
        return Err(Error::Precondition(format!(
            "need r0 >= r1, got r0 = {r0}, r1 = {r1}"
        )));
    }
    if t > r1 {
        return Err(Error::Precondition(format!(
            "corank t = {t} exceeds r1 = {r1}"
        )));
    }
    Ok(t * (r0 - r1 + t))
}

/// `ρ(t) = dim M - t(r0 - r1 + t)`, the expected dimension of the corank-`t`
/// stratum.
pub fn expected_stratum_dim(dim_m: i64, r0: usize, r1: usize, t: usize) -> Result<i64> {
    Ok(dim_m - expected_codim(r0, r1, t)? as i64)
}

/// Corank-`t` normal form: the `r1 x r0` matrix with an identity of size
/// `r1 - t` in the upper-left corner.
pub fn corank_normal_form<T: FieldScalar>(r0: usize, r1: usize, t: usize) -> Matrix<T> {
    let mut m = Matrix::zero(r1, r0);
    for i in 0..r1 - t {
        m[(i, i)] = T::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{FromPrimitive, One, Zero};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn qm(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_i64_rows(rows)
    }

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn validate_examples() {
        // full-rank first map, empty tail when the cokernel vanishes
        let c = CollineationChain::new(3, 2, vec![qm(&[&[1, 0, 0], &[0, 1, 0]])]);
        assert!(c.validate().valid);

        // rank-1 first map continued by a surjection onto the cokernel
        let c = CollineationChain::new(
            3,
            2,
            vec![qm(&[&[1, 0, 0], &[0, 0, 0]]), qm(&[&[0, 1]])],
        );
        assert!(c.validate().valid, "{:?}", c.validate());

        // zero continuation: the last map fails to be surjective
        let c = CollineationChain::new(
            3,
            2,
            vec![qm(&[&[1, 0, 0], &[0, 0, 0]]), qm(&[&[0, 0]])],
        );
        let diag = c.validate();
        assert!(!diag.valid);
        assert_eq!(diag.first_violation.unwrap(), "last map not surjective");
    }

    #[test]
    fn validate_rejects_early_termination_and_shape_errors() {
        // the first map is degenerate, so stopping there is premature
        let c = CollineationChain::new(3, 2, vec![qm(&[&[1, 0, 0], &[0, 0, 0]])]);
        assert!(!c.validate().valid);
        // wrong continuation shape
        let c = CollineationChain::new(
            3,
            2,
            vec![qm(&[&[1, 0, 0], &[0, 0, 0]]), qm(&[&[1, 0, 0]])],
        );
        assert!(c
            .validate()
            .first_violation
            .unwrap()
            .contains("shape"));
        // empty chains need a vanishing side
        assert!(!CollineationChain::<Rat>::new(3, 2, vec![]).validate().valid);
        assert!(CollineationChain::<Rat>::new(0, 2, vec![]).validate().valid);
    }

    #[test]
    fn transpose_chain_examples() {
        let c = CollineationChain::new(
            3,
            2,
            vec![qm(&[&[1, 0, 0], &[0, 0, 0]]), qm(&[&[0, 1]])],
        );
        let t = c.transpose_chain().unwrap();
        assert_eq!((t.dim_v0, t.dim_v1), (2, 3));
        assert!(t.validate().valid);
        assert_eq!(t.chi(), -c.chi());
        // involution up to the double-dual identification
        assert_eq!(t.transpose_chain().unwrap(), c);

        // invalid chains are rejected
        let bad = CollineationChain::new(3, 2, vec![qm(&[&[1, 0, 0], &[0, 0, 0]])]);
        assert!(bad.transpose_chain().is_err());
    }

    #[test]
    fn greedy_complete_produces_valid_chains() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let r0 = rng.gen_range(1..=7usize);
            let r1 = rng.gen_range(1..=5usize);
            let rho1 = loop {
                let m: Matrix<Rat> =
                    Matrix::from_fn(r1, r0, |_, _| Rat::from_i64(rng.gen_range(-2..=2)).unwrap());
                if !m.is_zero() {
                    break m;
                }
            };
            let chain = greedy_complete(rho1, &mut rng);
            let diag = chain.validate();
            assert!(diag.valid, "{:?}", diag);
            assert!(chain.maps.len() <= r0.min(r1) + 1);
        }
    }

    #[test]
    fn stratum_index_examples() {
        assert_eq!(stratum_index(&Matrix::<Rat>::identity(3)), 0);
        assert_eq!(stratum_index(&Matrix::<Rat>::zero(3, 2)), 2);
        let rank1 = qm(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(stratum_index(&rank1), 1);
        assert_eq!(stratum_index(&rank1.transpose()), 1);
    }

    #[test]
    fn ker_coker_duality_examples() {
        assert!(ker_coker_duality(&Matrix::<Rat>::identity(4)));
        assert!(ker_coker_duality(&qm(&[&[1, 2], &[2, 4], &[3, 6]])));
        assert!(ker_coker_duality(&Matrix::<Rat>::zero(3, 2)));
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let e: Matrix<Rat> =
                Matrix::from_fn(5, 7, |_, _| Rat::from_i64(rng.gen_range(-3..=3)).unwrap());
            assert!(ker_coker_duality(&e));
        }
    }

    #[test]
    fn petri_universal_2x2() {
        let family = MatrixFamily::<Rat>::universal(2, 2);
        let x0 = vec![Rat::zero(); 4];
        let form = petri_form(&family, &x0, 2).unwrap();
        assert_eq!((form.kernel_dim, form.coker_dim), (2, 2));
        assert_eq!(form.rank(), 4);
        // corank precondition is enforced
        assert!(petri_form(&family, &x0, 1).is_err());
    }

    #[test]
    fn petri_constant_family_vanishes() {
        let family =
            MatrixFamily::new(corank_normal_form::<Rat>(3, 2, 1), vec![Matrix::zero(2, 3)])
                .unwrap();
        let form = petri_form(&family, &[Rat::zero()], 1).unwrap();
        assert!(form.is_zero());
        assert!(petri_dual_agreement(&family, &[Rat::zero()]).unwrap());
    }

    #[test]
    fn tangent_cone_of_determinant_is_the_quadric() {
        // for the universal 2x2 family at the origin, the degeneracy locus
        // of the Petri matrix is cut out by x1·x4 - x2·x3
        let family = MatrixFamily::<Rat>::universal(2, 2);
        for x1 in -2..=2i64 {
            for x2 in -2..=2i64 {
                for x3 in -2..=2i64 {
                    for x4 in -2..=2i64 {
                        let x: Vec<Rat> = [x1, x2, x3, x4]
                            .iter()
                            .map(|&v| Rat::from_i64(v).unwrap())
                            .collect();
                        let e = family.eval(&x);
                        let det = e[(0, 0)].clone() * e[(1, 1)].clone()
                            - e[(0, 1)].clone() * e[(1, 0)].clone();
                        let quadric = Rat::from_i64(x1 * x4 - x2 * x3).unwrap();
                        assert_eq!(det, quadric);
                    }
                }
            }
        }
        // its vanishing locus has the expected codimension of the first
        // degeneracy stratum
        assert_eq!(expected_codim(2, 2, 1).unwrap(), 1);
    }

    #[test]
    fn petri_dual_agreement_examples() {
        let family = MatrixFamily::<Rat>::universal(2, 2);
        assert!(petri_dual_agreement(&family, &[Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()]).unwrap());

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let r1 = rng.gen_range(1..=5usize);
            let r0 = rng.gen_range(r1..=7usize);
            let p = rng.gen_range(1..=3usize);
            let constant: Matrix<Rat> =
                Matrix::from_fn(r1, r0, |_, _| Rat::from_i64(rng.gen_range(-2..=2)).unwrap());
            let directions = (0..p)
                .map(|_| {
                    Matrix::from_fn(r1, r0, |_, _| Rat::from_i64(rng.gen_range(-2..=2)).unwrap())
                })
                .collect();
            let family = MatrixFamily::new(constant, directions).unwrap();
            let x0: Vec<Rat> = (0..p)
                .map(|_| Rat::from_i64(rng.gen_range(-2..=2)).unwrap())
                .collect();
            assert!(petri_dual_agreement(&family, &x0).unwrap());
        }
    }

    #[test]
    fn finite_difference_equals_directional_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let p = rng.gen_range(1..=3usize);
            let family = MatrixFamily::new(
                Matrix::from_fn(3, 4, |_, _| Rat::from_i64(rng.gen_range(-2..=2)).unwrap()),
                (0..p)
                    .map(|_| {
                        Matrix::from_fn(3, 4, |_, _| {
                            Rat::from_i64(rng.gen_range(-2..=2)).unwrap()
                        })
                    })
                    .collect(),
            )
            .unwrap();
            let x0: Vec<Rat> = (0..p)
                .map(|_| Rat::from_i64(rng.gen_range(-2..=2)).unwrap())
                .collect();
            let xi: Vec<Rat> = (0..p)
                .map(|_| Rat::from_i64(rng.gen_range(-2..=2)).unwrap())
                .collect();
            let h = q(rng.gen_range(1..=5), rng.gen_range(1..=3));
            let shifted: Vec<Rat> = x0
                .iter()
                .zip(&xi)
                .map(|(a, b)| a.clone() + h.clone() * b.clone())
                .collect();
            let quotient = family
                .eval(&shifted)
                .sub(&family.eval(&x0))
                .scale(&(Rat::one() / h));
            assert_eq!(quotient, family.directional_derivative(&xi));
        }
    }

    #[test]
    fn expected_codim_examples() {
        assert_eq!(expected_codim(7, 5, 0).unwrap(), 0);
        for (r, t) in [(3, 1), (4, 2), (5, 3)] {
            assert_eq!(expected_codim(r, r, t).unwrap(), t * t);
        }
        assert_eq!(expected_codim(7, 5, 1).unwrap(), 3);
        assert!(expected_codim(4, 5, 1).is_err());
        assert!(expected_codim(5, 4, 5).is_err());
        assert_eq!(expected_stratum_dim(10, 7, 5, 1).unwrap(), 7);
    }
}
