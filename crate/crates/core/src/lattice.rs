//! The algebraic Mukai lattice at genus `g`.
//!
//! Vectors are triples `(r, d, s)` with first Chern class `d·L` for the
//! minimal polarization class `L`, `L² = 2g-2`. The pairing is
//! `⟨v,w⟩ = d_v·d_w·(2g-2) - r_v·s_w - r_w·s_v` and the dimension of the
//! moduli space attached to `v` is `⟨v,v⟩ + 2`.

use crate::error::{Error, Result};
use crate::scalar::{int, IntScalar};

use std::fmt;

/// Genus of the polarized K3 model; `g >= 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Genus<T> {
    g: T,
}

impl<T: IntScalar> Genus<T> {
    pub fn new(g: T) -> Result<Self> {
        if g < int(2) {
            return Err(Error::InvalidGenus(format!("{g} < 2")));
        }
        Ok(Genus { g })
    }

    /// Convenience constructor from a small literal; panics below 2.
    pub fn of(g: i64) -> Self {
        Self::new(int(g)).expect("genus must be at least 2")
    }

    pub fn g(&self) -> &T {
        &self.g
    }

    /// `L² = 2g - 2`, always positive. Derived, never stored.
    pub fn l_squared(&self) -> T {
        int::<T>(2) * self.g.clone() - int(2)
    }

    pub fn g_minus_1(&self) -> T {
        self.g.clone() - T::one()
    }
}

impl<T: fmt::Display> fmt::Display for Genus<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={}", self.g)
    }
}

/// Region membership of a Mukai vector: `V` is the hyperboloid of non-empty
/// moduli (with non-negative rank), `H` its slice at `c1 = L`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Region {
    pub in_v: bool,
    pub in_h: bool,
}

/// A Mukai vector `(r, d·L, s)`. Negative rank is permitted; the moduli
/// space attached to a negative-rank vector is the one of `sigma∘tau(v)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MukaiVector<T> {
    pub r: T,
    pub d: T,
    pub s: T,
}

impl<T: IntScalar> MukaiVector<T> {
    pub fn new(r: T, d: T, s: T) -> Self {
        MukaiVector { r, d, s }
    }

    /// Convenience constructor from small literals.
    pub fn of(r: i64, d: i64, s: i64) -> Self {
        Self::new(int(r), int(d), int(s))
    }

    /// The vector `t·(1,0,1)` of the trivial rank-`t` bundle.
    pub fn trivial(t: T) -> Self {
        MukaiVector {
            r: t.clone(),
            d: T::zero(),
            s: t,
        }
    }

    /// Mukai pairing `d_v·d_w·(2g-2) - r_v·s_w - r_w·s_v`.
    pub fn pairing(&self, other: &Self, g: &Genus<T>) -> T {
        self.d.clone() * other.d.clone() * g.l_squared()
            - self.r.clone() * other.s.clone()
            - other.r.clone() * self.s.clone()
    }

    /// Euler characteristic `χ(v) = r + s`.
    pub fn euler(&self) -> T {
        self.r.clone() + self.s.clone()
    }

    /// `dim M(v) = ⟨v,v⟩ + 2`; for `d = 1` this is `2g - 2rs`.
    pub fn dim_moduli(&self, g: &Genus<T>) -> T {
        self.pairing(self, g) + int(2)
    }

    /// Membership in the regions `V` and `H`. Vectors with `r = d = 0`
    /// (zero-dimensional support, or the zero vector) are excluded from `V`.
    pub fn in_region(&self, g: &Genus<T>) -> Region {
        let half_dim = T::one() + self.d.clone() * self.d.clone() * g.g_minus_1()
            - self.r.clone() * self.s.clone();
        let in_v = !half_dim.is_negative()
            && !self.r.is_negative()
            && !(self.r.is_zero() && self.d.is_zero());
        let in_h = in_v && self.d.is_one();
        Region { in_v, in_h }
    }

    /// Membership in `H` up to the negative-rank convention: `d = 1` and
    /// `g - rs >= 0`, with `M(v)` read as `M(sigma∘tau(v))` when `r < 0`.
    pub fn in_h_normalized(&self, g: &Genus<T>) -> bool {
        self.normalize().in_region(g).in_h
    }

    /// Tensorization by `O(k)`:
    /// `(r, d + rk, s + k·d·(2g-2) + k²·r·(g-1))`.
    pub fn tensor(&self, k: &T, g: &Genus<T>) -> Self {
        MukaiVector {
            r: self.r.clone(),
            d: self.d.clone() + self.r.clone() * k.clone(),
            s: self.s.clone()
                + k.clone() * self.d.clone() * g.l_squared()
                + k.clone() * k.clone() * self.r.clone() * g.g_minus_1(),
        }
    }

    /// Reflection through the hyperplane `r - s = 0`.
    pub fn sigma(&self) -> Self {
        MukaiVector {
            r: self.s.clone(),
            d: self.d.clone(),
            s: self.r.clone(),
        }
    }

    /// Reflection through the hyperplane `r + s = 0`.
    pub fn tau(&self) -> Self {
        MukaiVector {
            r: -self.s.clone(),
            d: self.d.clone(),
            s: -self.r.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        MukaiVector {
            r: -self.r.clone(),
            d: -self.d.clone(),
            s: -self.s.clone(),
        }
    }

    /// The composite `sigma∘tau = tau∘sigma: (r,d,s) ↦ (-r,d,-s)`.
    pub fn sigma_tau(&self) -> Self {
        MukaiVector {
            r: -self.r.clone(),
            d: self.d.clone(),
            s: -self.s.clone(),
        }
    }

    /// Negative-rank convention: vectors with `r < 0` denote the moduli
    /// space of `sigma∘tau(v)`.
    pub fn normalize(&self) -> Self {
        if self.r.is_negative() {
            self.sigma_tau()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        MukaiVector {
            r: self.r.clone() + other.r.clone(),
            d: self.d.clone() + other.d.clone(),
            s: self.s.clone() + other.s.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        MukaiVector {
            r: self.r.clone() - other.r.clone(),
            d: self.d.clone() - other.d.clone(),
            s: self.s.clone() - other.s.clone(),
        }
    }

    /// `v + k·(1,0,1)` for signed `k`.
    pub fn shift(&self, k: &T) -> Self {
        MukaiVector {
            r: self.r.clone() + k.clone(),
            d: self.d.clone(),
            s: self.s.clone() + k.clone(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for MukaiVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.d, self.s)
    }
}

/// `S^[d] ≅ M(1, L, g-d)`.
pub fn hilbert_vector<T: IntScalar>(d: &T, g: &Genus<T>) -> MukaiVector<T> {
    MukaiVector {
        r: T::one(),
        d: T::one(),
        s: g.g().clone() - d.clone(),
    }
}

/// `J^d ≅ M(0, L, d+1-g)`.
pub fn jacobian_vector<T: IntScalar>(d: &T, g: &Genus<T>) -> MukaiVector<T> {
    MukaiVector {
        r: T::zero(),
        d: T::one(),
        s: d.clone() + T::one() - g.g().clone(),
    }
}

/// Gram matrix of the pairing in `(r,d,s)` coordinates:
/// `[[0,0,-1],[0,2g-2,0],[-1,0,0]]`.
pub fn gram_matrix<T: IntScalar>(g: &Genus<T>) -> [[T; 3]; 3] {
    let z = T::zero;
    [
        [z(), z(), -T::one()],
        [z(), g.l_squared(), z()],
        [-T::one(), z(), z()],
    ]
}

/// An integer 3x3 matrix acting on `(r,d,s)` coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeIsometry<T> {
    pub m: [[T; 3]; 3],
}

impl<T: IntScalar> LatticeIsometry<T> {
    pub fn new(m: [[T; 3]; 3]) -> Self {
        LatticeIsometry { m }
    }

    pub fn from_i64(m: [[i64; 3]; 3]) -> Self {
        LatticeIsometry {
            m: m.map(|row| row.map(|x| int(x))),
        }
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// Matrix of `sigma`: coordinate swap `(r,d,s) ↦ (s,d,r)`.
    pub fn sigma() -> Self {
        Self::from_i64([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    }

    /// Matrix of `tau`: `(r,d,s) ↦ (-s,d,-r)`.
    pub fn tau() -> Self {
        Self::from_i64([[0, 0, -1], [0, 1, 0], [-1, 0, 0]])
    }

    pub fn neg() -> Self {
        Self::from_i64([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    }

    /// Matrix of tensorization by `O(k)`.
    pub fn tensor_by(k: &T, g: &Genus<T>) -> Self {
        let z = T::zero;
        LatticeIsometry {
            m: [
                [T::one(), z(), z()],
                [k.clone(), T::one(), z()],
                [
                    k.clone() * k.clone() * g.g_minus_1(),
                    k.clone() * g.l_squared(),
                    T::one(),
                ],
            ],
        }
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = [
            [T::zero(), T::zero(), T::zero()],
            [T::zero(), T::zero(), T::zero()],
            [T::zero(), T::zero(), T::zero()],
        ];
        for (i, out_row) in out.iter_mut().enumerate() {
            for (j, out_entry) in out_row.iter_mut().enumerate() {
                let mut acc = T::zero();
                for k in 0..3 {
                    acc = acc + self.m[i][k].clone() * rhs.m[k][j].clone();
                }
                *out_entry = acc;
            }
        }
        LatticeIsometry { m: out }
    }

    pub fn apply(&self, v: &MukaiVector<T>) -> MukaiVector<T> {
        let coords = [v.r.clone(), v.d.clone(), v.s.clone()];
        let mut out = [T::zero(), T::zero(), T::zero()];
        for (i, out_entry) in out.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (k, coord) in coords.iter().enumerate() {
                acc = acc + self.m[i][k].clone() * coord.clone();
            }
            *out_entry = acc;
        }
        let [r, d, s] = out;
        MukaiVector { r, d, s }
    }

    /// Whether `mᵀ·Q_g·m = Q_g` holds exactly.
    #[allow(clippy::needless_range_loop)]
    pub fn is_isometry(&self, g: &Genus<T>) -> bool {
        let q = gram_matrix(g);
        for i in 0..3 {
            for j in 0..3 {
                // (mᵀ Q m)[i][j] = Σ_{a,b} m[a][i]·Q[a][b]·m[b][j]
                let mut acc = T::zero();
                for a in 0..3 {
                    for b in 0..3 {
                        if q[a][b].is_zero() {
                            continue;
                        }
                        acc = acc
                            + self.m[a][i].clone() * q[a][b].clone() * self.m[b][j].clone();
                    }
                }
                if acc != q[i][j] {
                    return false;
                }
            }
        }
        true
    }

    /// Image of `(0,0,1)`, the obstruction probe for the reflection subgroup.
    pub fn image_of_point_class(&self) -> MukaiVector<T> {
        self.apply(&MukaiVector::new(T::zero(), T::zero(), T::one()))
    }

    /// Necessary condition for membership in the subgroup generated by
    /// `-Id`, `sigma`, `tau` and tensorization: the image of `(0,0,1)` must
    /// satisfy [`gamma_vector_property`]. Returning `false` certifies
    /// non-membership; `true` decides nothing.
    pub fn gamma_criterion(&self, g: &Genus<T>) -> bool {
        gamma_vector_property(&self.image_of_point_class(), g)
    }
}

/// The divisibility property behind the subgroup obstruction: `g-1` divides
/// exactly one of `{r, s}` and is coprime to the other. Preserved by
/// `sigma`, `tau`, `-Id` and tensorization. At `g = 2` divisibility by
/// `g-1 = 1` carries no obstruction (the subgroup is the full isometry
/// group) and the property is read as vacuously true.
pub fn gamma_vector_property<T: IntScalar>(v: &MukaiVector<T>, g: &Genus<T>) -> bool {
    let gm1 = g.g_minus_1();
    if gm1.is_one() {
        return true;
    }
    let div_r = v.r.is_multiple_of(&gm1);
    let div_s = v.s.is_multiple_of(&gm1);
    match (div_r, div_s) {
        (true, false) => gm1.gcd(&v.s).is_one(),
        (false, true) => gm1.gcd(&v.r).is_one(),
        _ => false,
    }
}

impl<T: fmt::Display> fmt::Display for LatticeIsometry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            writeln!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// Builds `sigma' = O(1)∘sigma∘O(-1)` and `tau' = O(1)∘tau∘O(-1)` and checks
/// the exact matrix identity `O(2) = sigma'·tau'·sigma·tau`.
pub fn verify_o2_identity<T: IntScalar>(g: &Genus<T>) -> bool {
    let o1 = LatticeIsometry::tensor_by(&T::one(), g);
    let o_neg1 = LatticeIsometry::tensor_by(&(-T::one()), g);
    let o2 = LatticeIsometry::tensor_by(&int(2), g);
    let sigma = LatticeIsometry::sigma();
    let tau = LatticeIsometry::tau();
    let sigma_p = o1.compose(&sigma).compose(&o_neg1);
    let tau_p = o1.compose(&tau).compose(&o_neg1);
    let word = sigma_p.compose(&tau_p).compose(&sigma).compose(&tau);
    word == o2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type V = MukaiVector<Int>;
    type G = Genus<Int>;

    #[test]
    fn genus_validation() {
        assert!(G::new(Int::from(1)).is_err());
        assert!(G::new(Int::from(2)).is_ok());
    }

    #[test]
    fn pairing_examples() {
        // only the -r's'' term survives
        let g = G::of(11);
        assert_eq!(V::of(1, 0, 0).pairing(&V::of(0, 0, 1), &g), Int::from(-1));
        // direct evaluation 1·1·2 - 0 - 0
        assert_eq!(V::of(1, 1, 0).pairing(&V::of(1, 1, 0), &G::of(2)), Int::from(2));
        // ⟨v,v⟩ = dim M(v) - 2
        let v = V::of(1, 1, 0);
        let g6 = G::of(6);
        assert_eq!(v.pairing(&v, &g6), Int::from(10));
        assert_eq!(v.dim_moduli(&g6), Int::from(12));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(V::of(1, 1, 0).euler(), Int::from(1));
        assert_eq!(V::of(0, 1, 7).euler(), Int::from(7));
        assert_eq!(V::of(2, 1, -1).euler(), Int::from(1));
    }

    #[test]
    fn dim_moduli_examples() {
        assert_eq!(V::of(1, 1, 0).dim_moduli(&G::of(6)), Int::from(12));
        assert_eq!(V::of(3, 1, 2).dim_moduli(&G::of(6)), Int::from(0));
        for g in 2..20 {
            let gg = G::of(g);
            assert_eq!(V::of(0, 1, 1 - g).dim_moduli(&gg), Int::from(2 * g));
        }
    }

    #[test]
    fn region_examples() {
        let r = V::of(1, 1, 0).in_region(&G::of(2));
        assert!(r.in_v && r.in_h);
        let r = V::of(3, 1, 3).in_region(&G::of(6));
        assert!(!r.in_v && !r.in_h);
        let r = V::of(-1, 1, 0).in_region(&G::of(6));
        assert!(!r.in_v && !r.in_h);
        // excluded class: r = d = 0
        let r = V::of(0, 0, 1).in_region(&G::of(7));
        assert!(!r.in_v && !r.in_h);
        // but the negative-rank convention recovers (-1,1,0)
        assert!(V::of(-1, 1, 0).in_h_normalized(&G::of(6)));
    }

    #[test]
    fn tensor_examples() {
        for g in 2..10 {
            let gg = G::of(g);
            for n in -3..4 {
                assert_eq!(
                    V::of(1, 0, 1 - n).tensor(&Int::one(), &gg),
                    V::of(1, 1, g - n)
                );
            }
            let v = V::of(3, -2, 5);
            assert_eq!(v.tensor(&Int::zero(), &gg), v);
        }
        assert_eq!(V::of(0, 1, 0).tensor(&Int::one(), &G::of(2)), V::of(0, 1, 2));
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(V::of(1, 1, 0).sigma(), V::of(0, 1, 1));
        assert_eq!(V::of(1, 1, -2).tau(), V::of(2, 1, -1));
        // sigma∘tau carries J^n to J^{2g-2-n}
        for g in 2..12 {
            let gg = G::of(g);
            for n in 0..2 * g {
                let v = jacobian_vector(&Int::from(n), &gg);
                let w = jacobian_vector(&Int::from(2 * g - 2 - n), &gg);
                assert_eq!(v.sigma_tau(), w);
            }
        }
    }

    #[test]
    fn named_moduli_vectors() {
        for g in 2..12 {
            let gg = G::of(g);
            assert_eq!(hilbert_vector(&Int::from(g), &gg), V::of(1, 1, 0));
            assert_eq!(jacobian_vector(&Int::from(g), &gg), V::of(0, 1, 1));
            assert_eq!(jacobian_vector(&Int::from(g - 1), &gg), V::of(0, 1, 0));
        }
    }

    #[test]
    fn isometry_examples() {
        let g7 = G::of(7);
        assert!(LatticeIsometry::<Int>::identity().is_isometry(&g7));
        assert!(LatticeIsometry::<Int>::sigma().is_isometry(&g7));
        assert!(LatticeIsometry::<Int>::tau().is_isometry(&g7));
        assert!(LatticeIsometry::<Int>::neg().is_isometry(&g7));
        let m = LatticeIsometry::<Int>::from_i64([[2, 12, 3], [1, 5, 1], [3, 12, 2]]);
        assert!(m.is_isometry(&g7));
        // not an isometry once perturbed
        let bad = LatticeIsometry::<Int>::from_i64([[2, 12, 3], [1, 5, 1], [3, 12, 3]]);
        assert!(!bad.is_isometry(&g7));
    }

    #[test]
    fn gamma_criterion_examples() {
        let g7 = G::of(7);
        assert!(LatticeIsometry::<Int>::identity().gamma_criterion(&g7));
        assert!(LatticeIsometry::<Int>::sigma().gamma_criterion(&g7));
        let m = LatticeIsometry::<Int>::from_i64([[2, 12, 3], [1, 5, 1], [3, 12, 2]]);
        assert_eq!(m.image_of_point_class(), V::of(3, 1, 2));
        assert!(!m.gamma_criterion(&g7));
        // at genus 2 the subgroup is everything; no obstruction
        assert!(m.gamma_criterion(&G::of(2)));
    }

    #[test]
    fn o2_identity_examples() {
        for g in [2, 7, 20] {
            assert!(verify_o2_identity(&G::of(g)));
        }
    }

    #[test]
    fn generator_matrices_act_like_vector_ops() {
        let g = G::of(5);
        let v = V::of(3, -2, 7);
        assert_eq!(LatticeIsometry::<Int>::sigma().apply(&v), v.sigma());
        assert_eq!(LatticeIsometry::<Int>::tau().apply(&v), v.tau());
        assert_eq!(LatticeIsometry::<Int>::neg().apply(&v), v.neg());
        for k in -4..5 {
            let k = Int::from(k);
            assert_eq!(
                LatticeIsometry::tensor_by(&k, &g).apply(&v),
                v.tensor(&k, &g)
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn pairing_symmetric_bilinear_and_invariant(
            g in 2i64..=50,
            (r1, s1) in (-20i64..=20, -20i64..=20),
            (r2, s2) in (-20i64..=20, -20i64..=20),
            (r3, s3) in (-20i64..=20, -20i64..=20),
            d1 in -5i64..=5, d2 in -5i64..=5, d3 in -5i64..=5,
            a in -3i64..=3,
            k in -10i64..=10,
        ) {
            let gg = G::of(g);
            let v = V::of(r1, d1, s1);
            let w = V::of(r2, d2, s2);
            let u = V::of(r3, d3, s3);
            // symmetry
            prop_assert_eq!(v.pairing(&w, &gg), w.pairing(&v, &gg));
            // bilinearity in the first argument
            let av_plus_u = V::new(
                Int::from(a) * v.r.clone() + u.r.clone(),
                Int::from(a) * v.d.clone() + u.d.clone(),
                Int::from(a) * v.s.clone() + u.s.clone(),
            );
            prop_assert_eq!(
                av_plus_u.pairing(&w, &gg),
                Int::from(a) * v.pairing(&w, &gg) + u.pairing(&w, &gg)
            );
            // the group action preserves the pairing
            let k = Int::from(k);
            prop_assert_eq!(v.sigma().pairing(&w.sigma(), &gg), v.pairing(&w, &gg));
            prop_assert_eq!(v.tau().pairing(&w.tau(), &gg), v.pairing(&w, &gg));
            prop_assert_eq!(v.neg().pairing(&w.neg(), &gg), v.pairing(&w, &gg));
            prop_assert_eq!(
                v.tensor(&k, &gg).pairing(&w.tensor(&k, &gg), &gg),
                v.pairing(&w, &gg)
            );
        }

        #[test]
        fn klein_four_action(
            g in 2i64..=50,
            r in -20i64..=20, d in -5i64..=5, s in -20i64..=20,
            a in -10i64..=10, b in -10i64..=10,
        ) {
            let gg = G::of(g);
            let v = V::of(r, d, s);
            prop_assert_eq!(v.sigma().sigma(), v.clone());
            prop_assert_eq!(v.tau().tau(), v.clone());
            prop_assert_eq!(v.sigma().tau(), v.tau().sigma());
            prop_assert_eq!(v.sigma().tau(), v.sigma_tau());
            // tensor is additive in the twist
            let (a, b) = (Int::from(a), Int::from(b));
            prop_assert_eq!(
                v.tensor(&a, &gg).tensor(&b, &gg),
                v.tensor(&(a + b), &gg)
            );
            // reflections preserve the moduli dimension
            prop_assert_eq!(v.sigma().dim_moduli(&gg), v.dim_moduli(&gg));
            prop_assert_eq!(v.tau().dim_moduli(&gg), v.dim_moduli(&gg));
        }
    }
}
