//! Finite-dimensional models of the dual Springer resolutions
//! `T*G(t,H) → closure(N^t) ← T*G(t,H*)` over exact rationals.
//!
//! A point of `T*G(t,H)` is a subspace `W ⊂ H` of dimension `t <= h/2`
//! together with a homomorphism `ψ : H/W → W`. The resolution sends it to
//! the square-zero endomorphism `H ↠ H/W → W ↪ H`. Subspaces are
//! canonicalized by reduced row echelon form and quotients are coordinatized
//! on the non-pivot columns, so every identity here is exact-equality
//! testable.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::scalar::FieldScalar;
use num_traits::Zero;
use rand::Rng;
use std::fmt;

/// A point `(W, ψ)` of the cotangent bundle of `G(t,H)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CotangentPoint<T> {
    h: usize,
    t: usize,
    w: Subspace<T>,
    psi: Matrix<T>,
}

impl<T: FieldScalar> CotangentPoint<T> {
    /// Builds a point from a spanning set for `W` (rows) and the matrix of
    /// `ψ` in the canonical bases (`t` rows, one column per non-pivot
    /// coordinate of `H/W`).
    pub fn new(w_span: &Matrix<T>, psi: Matrix<T>) -> Result<Self> {
        let h = w_span.cols();
        let w = Subspace::from_span(w_span);
        let t = w.dim();
        if t < 1 || 2 * t > h {
            return Err(Error::Precondition(format!(
                "need 1 <= t <= h/2, got t = {t}, h = {h}"
            )));
        }
        if w.dim() != w_span.rows() {
            return Err(Error::Precondition(format!(
                "spanning rows are dependent: rank {t} < {}",
                w_span.rows()
            )));
        }
        if psi.rows() != t || psi.cols() != h - t {
            return Err(Error::ShapeMismatch(format!(
                "ψ must be {}x{}, got {}x{}",
                t,
                h - t,
                psi.rows(),
                psi.cols()
            )));
        }
        Ok(CotangentPoint { h, t, w, psi })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn subspace(&self) -> &Subspace<T> {
        &self.w
    }

    pub fn psi(&self) -> &Matrix<T> {
        &self.psi
    }

    /// `n = h - 2t + 1`, the codimension label of the first stratum.
    pub fn n(&self) -> usize {
        self.h - 2 * self.t + 1
    }

    /// The square-zero endomorphism `(W ↪ H) ∘ ψ ∘ (H ↠ H/W)`. Its image
    /// lies in `W`, `W` lies in its kernel, and its rank equals `rank ψ`.
    pub fn springer(&self) -> Matrix<T> {
        self.w
            .inclusion()
            .mul(&self.psi)
            .mul(&self.w.quotient_projection())
    }

    /// `t - rank ψ`; the point lies in the stratum of index `r` exactly for
    /// `r <= corank`.
    pub fn corank(&self) -> usize {
        self.t - self.psi.rank()
    }

    /// Deformation through the idempotent extension: acts as `γ` on `W`,
    /// as zero on the chosen complement, plus the nilpotent `ψ`-part.
    /// Satisfies `A² = γ·A` exactly; for `γ != 0` the rank is exactly `t`,
    /// for `γ = 0` this is the Springer endomorphism.
    pub fn deform(&self, gamma: &T) -> Matrix<T> {
        let scalar_part = self.w.coordinate_selection().scale(gamma);
        let nilpotent_part = self.psi.mul(&self.w.quotient_projection());
        self.w.inclusion().mul(&scalar_part.add(&nilpotent_part))
    }
}

impl<T: FieldScalar> fmt::Display for CotangentPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CotangentPoint(h={}, t={}, W pivots {:?})",
            self.h,
            self.t,
            self.w.pivots()
        )
    }
}

/// Inverts the resolution on the dense orbit: for a square-zero `N` of rank
/// exactly `t`, returns the point of `T*G(t,H*)` whose Springer image is the
/// transpose of `N` (in dual coordinates). Off the dense orbit the map is
/// undefined and a distinct error is raised; callers should use
/// [`fiber_space`] there.
pub fn dual_point<T: FieldScalar>(n: &Matrix<T>, t: usize) -> Result<CotangentPoint<T>> {
    ensure_square_zero(n)?;
    let rank = n.rank();
    if rank < t {
        return Err(Error::OffDenseOrbit { rank, expected: t });
    }
    if rank > t {
        return Err(Error::Precondition(format!(
            "rank {rank} exceeds the orbit parameter t = {t}"
        )));
    }
    // W' = im(Nᵀ) = row space of N, as a subspace of the dual space.
    let w = Subspace::from_span(n);
    let pivots = w.pivots().to_vec();
    let free = w.non_pivots();
    // ψ'([e*_j]) = Nᵀ e*_j read off in the canonical basis of W'; since W'
    // is in RREF those coefficients are the pivot coordinates.
    let psi = Matrix::from_fn(t, free.len(), |i, b| n[(free[b], pivots[i])].clone());
    let point = CotangentPoint::new(w.basis(), psi)?;
    debug_assert_eq!(point.springer(), n.transpose());
    Ok(point)
}

/// Fiber of the resolution over a square-zero `N` of rank `k <= t`: the
/// Grassmannian of `(t-k)`-dimensional subspaces of `ker N / im N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberSpace {
    /// Rank of the endomorphism.
    pub k: usize,
    /// Fiber `G(sub, ambient) = G(t-k, h-2k)`.
    pub grassmann: (usize, usize),
}

impl FiberSpace {
    pub fn dim(&self) -> usize {
        let (a, n) = self.grassmann;
        a * (n - a)
    }

    /// A point exactly when the fiber is `G(0, ·)`.
    pub fn is_point(&self) -> bool {
        self.grassmann.0 == 0
    }
}

/// Computes the fiber descriptor of the resolution `T*G(t,H) → closure(N^t)`
/// over `N` and asserts the consistency `h - 2k = n + 2(t-k) - 1` with
/// `n = h - 2t + 1`, tying the fiber count to the Grassmannian-bundle label
/// of the stratum maps.
pub fn fiber_space<T: FieldScalar>(n: &Matrix<T>, t: usize) -> Result<FiberSpace> {
    ensure_square_zero(n)?;
    let h = n.rows();
    if 2 * t > h {
        return Err(Error::Precondition(format!(
            "need t <= h/2, got t = {t}, h = {h}"
        )));
    }
    let k = n.rank();
    if k > t {
        return Err(Error::Precondition(format!(
            "rank {k} exceeds the orbit parameter t = {t}"
        )));
    }
    let fiber = FiberSpace {
        k,
        grassmann: (t - k, h - 2 * k),
    };
    let n_label = h - 2 * t + 1;
    assert_eq!(
        h - 2 * k,
        n_label + 2 * (t - k) - 1,
        "fiber ambient must match the stratum bundle label"
    );
    Ok(fiber)
}

fn ensure_square_zero<T: FieldScalar>(n: &Matrix<T>) -> Result<()> {
    if !n.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} endomorphism",
            n.rows(),
            n.cols()
        )));
    }
    if !n.mul(n).is_zero() {
        return Err(Error::NotSquareZero);
    }
    Ok(())
}

/// Corank of the canonical composition `W ↪ H ↠ H/W~`: the dimension of
/// `W ∩ W~`. Equals `dim W` exactly when `W ⊂ W~` and `0` exactly when the
/// sum is direct; for the complementary case `dim W~ = h - dim W`, corank
/// `0` means the pair decomposes `H`.
pub fn alpha_corank<T: FieldScalar>(w: &Subspace<T>, wt: &Subspace<T>) -> Result<usize> {
    if w.ambient() != wt.ambient() {
        return Err(Error::ShapeMismatch(
            "subspaces live in different ambient spaces".into(),
        ));
    }
    let composition = wt.quotient_projection().mul(&w.inclusion());
    Ok(w.dim() - composition.rank())
}

/// A partition of `h` into weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Precondition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate Young diagram: part `i` of the dual is the length of the
    /// `i`-th column.
    pub fn conjugate(&self) -> Partition {
        let m = self.parts[0];
        let parts = (1..=m)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Conjugate of a partition (free function mirror of
/// [`Partition::conjugate`]).
pub fn dual_partition(eta: &Partition) -> Partition {
    eta.conjugate()
}

/// Flag dimension vector for a permutation `theta` of the parts of the
/// conjugate partition: the strictly increasing prefix sums
/// `n_j = Σ_{i<=j} η̂_{θ(i)}`, `j = 1..m-1` (zero-based `theta`).
pub fn flag_dims(eta: &Partition, theta: &[usize]) -> Result<Vec<usize>> {
    let etahat = eta.conjugate();
    let m = etahat.parts().len();
    if !is_permutation(theta, m) {
        return Err(Error::Precondition(format!(
            "theta must permute 0..{m}, got {theta:?}"
        )));
    }
    let mut sums = Vec::with_capacity(m.saturating_sub(1));
    let mut acc = 0;
    for &i in theta.iter().take(m.saturating_sub(1)) {
        acc += etahat.parts()[i];
        sums.push(acc);
    }
    Ok(sums)
}

fn is_permutation(theta: &[usize], m: usize) -> bool {
    theta.len() == m && {
        let mut seen = vec![false; m];
        theta.iter().all(|&i| {
            i < m && !std::mem::replace(&mut seen[i], true)
        })
    }
}

/// All partitions of `h`, in descending lexicographic order.
pub fn partitions_of(h: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(h, h, &mut current, &mut out);
    out
}

/// All permutations of `0..m`.
pub fn permutations_of(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..m).collect();
    fn rec(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(k + 1, items, out);
            items.swap(k, i);
        }
    }
    rec(0, &mut items, &mut out);
    out
}

/// Outcome of the exhaustive flag-resolution audit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FlagReport {
    /// Number of `(partition, permutation)` cases checked.
    pub cases: usize,
    pub failures: Vec<String>,
}

impl FlagReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every partition `η` of `h` and every ordering `θ` of the conjugate
/// parts: checks that the cotangent bundle of the flag variety with
/// dimension vector `n(θ)` has the dimension `h² - Σ η̂ᵢ²` of the nilpotent
/// orbit, and constructs from the Jordan basis of the canonical nilpotent
/// `N_η` an invariant flag with `N(F_{n_j}) ⊆ F_{n_{j-1}}`, verifying the
/// containments by exact linear algebra.
pub fn verify_flag_resolution_dims<T: FieldScalar>(h: usize) -> FlagReport {
    let mut report = FlagReport::default();
    for eta in partitions_of(h) {
        let etahat = eta.conjugate();
        let m = etahat.parts().len();
        let orbit_dim = h * h - etahat.parts().iter().map(|p| p * p).sum::<usize>();
        let n_eta: Matrix<T> = jordan_nilpotent(&eta);
        for theta in permutations_of(m) {
            report.cases += 1;
            let case = format!("η={eta}, θ={theta:?}");
            let dims = flag_dims(&eta, &theta).expect("theta enumerated as permutation");
            // block sizes of the flag, by differencing the dimension vector
            let mut blocks = Vec::with_capacity(m);
            let mut prev = 0;
            for &n_j in &dims {
                blocks.push(n_j - prev);
                prev = n_j;
            }
            blocks.push(h - prev);
            let tstar_dim = h * h - blocks.iter().map(|b| b * b).sum::<usize>();
            if tstar_dim != orbit_dim {
                report.failures.push(format!(
                    "{case}: dim T*Flag = {tstar_dim}, orbit dim = {orbit_dim}"
                ));
                continue;
            }
            if let Err(msg) = check_invariant_flag(&eta, &etahat, &theta, &dims, &n_eta) {
                report.failures.push(format!("{case}: {msg}"));
            }
        }
    }
    report
}

/// Jordan-canonical nilpotent of type `η`: one regular nilpotent block per
/// part.
pub fn jordan_nilpotent<T: FieldScalar>(eta: &Partition) -> Matrix<T> {
    let h = eta.sum();
    let mut n = Matrix::zero(h, h);
    let mut base = 0;
    for &p in eta.parts() {
        for j in 1..p {
            n[(base + j - 1, base + j)] = T::one();
        }
        base += p;
    }
    n
}

/// Assigns to every Jordan-basis vector a level in `1..=m` such that levels
/// are strictly increasing along each Jordan string and level `c` is used
/// exactly `η̂_{θ(c)}` times, then verifies the induced flag explicitly.
fn check_invariant_flag<T: FieldScalar>(
    eta: &Partition,
    etahat: &Partition,
    theta: &[usize],
    dims: &[usize],
    n_eta: &Matrix<T>,
) -> std::result::Result<(), String> {
    let h = eta.sum();
    let m = etahat.parts().len();
    let blocks = eta.parts();
    // Greedy degree-sequence realization: each level hands its slots to the
    // strings with the largest remaining demand.
    let mut demand: Vec<usize> = blocks.to_vec();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); blocks.len()];
    for (c, &th) in theta.iter().enumerate() {
        let capacity = etahat.parts()[th];
        let mut order: Vec<usize> = (0..blocks.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(demand[i]), i));
        if order.len() < capacity || demand[order[capacity - 1]] == 0 {
            return Err(format!("level {} slots cannot be filled", c + 1));
        }
        for &i in order.iter().take(capacity) {
            demand[i] -= 1;
            levels[i].push(c + 1);
        }
    }
    if demand.iter().any(|&d| d > 0) {
        return Err("level assignment left unplaced string positions".into());
    }
    for lv in &mut levels {
        lv.sort_unstable();
    }
    // Flag subspaces: F_j spanned by the Jordan vectors of level <= j.
    let mut flags: Vec<Subspace<T>> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut rows = Vec::new();
        let mut base = 0;
        for (i, &p) in blocks.iter().enumerate() {
            for pos in 0..p {
                if levels[i][pos] <= j {
                    let mut row = vec![T::zero(); h];
                    row[base + pos] = T::one();
                    rows.push(row);
                }
            }
            base += p;
        }
        flags.push(Subspace::from_span(&Matrix::from_rows(rows)));
    }
    // dimension vector
    for (j, &n_j) in dims.iter().enumerate() {
        if flags[j].dim() != n_j {
            return Err(format!(
                "flag step {} has dimension {}, expected {n_j}",
                j + 1,
                flags[j].dim()
            ));
        }
    }
    if flags[m - 1].dim() != h {
        return Err("full step must recover the ambient space".into());
    }
    // strict inclusions and N(F_j) ⊆ F_{j-1}, with F_0 = 0
    for j in 0..m {
        if j > 0 && !flags[j].contains_subspace(&flags[j - 1]) {
            return Err(format!("flag steps {j} ⊄ {}", j + 1));
        }
        let basis = flags[j].basis();
        for i in 0..basis.rows() {
            let image = n_eta.apply(basis.row(i));
            let ok = if j == 0 {
                image.iter().all(Zero::is_zero)
            } else {
                flags[j - 1].contains(&image)
            };
            if !ok {
                return Err(format!(
                    "nilpotent does not lower flag step {} into step {j}",
                    j + 1
                ));
            }
        }
    }
    Ok(())
}

/// Random integer matrix with entries uniform in `[lo, hi]`.
pub fn sample_matrix<T: FieldScalar>(
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
    rng: &mut impl Rng,
) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| {
        T::from_i64(rng.gen_range(lo..=hi)).unwrap()
    })
}

/// Random cotangent point with entries in `[-3, 3]`; the subspace is drawn
/// by rejection until it has full rank `t`.
pub fn sample_point<T: FieldScalar>(h: usize, t: usize, rng: &mut impl Rng) -> CotangentPoint<T> {
    assert!(t >= 1 && 2 * t <= h);
    loop {
        let w: Matrix<T> = sample_matrix(t, h, -3, 3, rng);
        if w.rank() != t {
            continue;
        }
        let psi = sample_matrix(t, h - t, -3, 3, rng);
        return CotangentPoint::new(&w, psi).expect("sampled shapes are valid");
    }
}

/// Random cotangent point on the dense orbit (`rank ψ = t`).
pub fn sample_dense_point<T: FieldScalar>(
    h: usize,
    t: usize,
    rng: &mut impl Rng,
) -> CotangentPoint<T> {
    loop {
        let p = sample_point(h, t, rng);
        if p.corank() == 0 {
            return p;
        }
    }
}
