//! Mutual information, classical correlation, quantum discord and local
//! quantum uncertainty (LQU).
//!
//! Every quantity has two routes: a closed form valid for [`SymXState`] and a
//! generic computation on any [`TwoQubitState`] that never uses the closed
//! form. Entropies are in bits.
//!
//! Discord measures subsystem B with projectors `(I ± n·σ)/2`:
//!
//! ```text
//! I = S(A) + S(B) - S(AB)
//! C = S(A) - min_n sum_k p_k S(rho_A|k)
//! D = I - C
//! ```
//!
//! For the symmetric X family the minimum is attained either along `σz`
//! (branch [`DiscordBranch::D1`]) or in the transverse plane
//! ([`DiscordBranch::D2`]).

use std::f64::consts::PI;

use nalgebra::{Matrix3, SymmetricEigen};
use serde::Serialize;

use crate::model::SymXState;
use crate::qmath::{
    block_entropy, entropy_bits, identity2, local_operator, partial_trace_matrix, paulis, Mat2,
    Mat4, Subsystem, TwoQubitState,
};

/// Outcomes less likely than this contribute nothing to the conditional
/// entropy.
pub const OUTCOME_PRUNE: f64 = 1e-14;

/// Polar grid resolution of the brute-force discord search.
pub const THETA_POINTS: usize = 181;
/// Azimuthal grid resolution of the brute-force discord search.
pub const PHI_POINTS: usize = 72;

/// Unit vector `n = (sinθ cosφ, sinθ sinφ, cosθ)` defining the projectors
/// `(I ± n·σ)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementDirection {
    theta: f64,
    phi: f64,
}

impl MeasurementDirection {
    /// Accepts any real angles and stores the canonical pair with
    /// `theta ∈ [0, π]`, `phi ∈ [0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Self {
        let n = unit_vector(theta, phi);
        Self::from_vector(n)
    }

    fn from_vector(n: [f64; 3]) -> Self {
        let theta = n[2].clamp(-1.0, 1.0).acos();
        let mut phi = n[1].atan2(n[0]);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn z() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn vector(&self) -> [f64; 3] {
        unit_vector(self.theta, self.phi)
    }

    /// The discord branch this direction belongs to: near the poles is the
    /// `σz` family, near the equator the transverse family.
    pub fn branch(&self) -> DiscordBranch {
        if self.theta.cos().abs() >= std::f64::consts::FRAC_1_SQRT_2 {
            DiscordBranch::D1
        } else {
            DiscordBranch::D2
        }
    }

    /// The two rank-one projectors `(I ± n·σ)/2` on one qubit.
    pub fn projectors(&self) -> [Mat2; 2] {
        let [sx, sy, sz] = paulis();
        let [x, y, z] = self.vector();
        let n_sigma = sx.scale(x) + sy.scale(y) + sz.scale(z);
        [
            (identity2() + n_sigma).scale(0.5),
            (identity2() - n_sigma).scale(0.5),
        ]
    }
}

fn unit_vector(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// Which closed-form expression attains the discord minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DiscordBranch {
    D1,
    D2,
}

impl DiscordBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            DiscordBranch::D1 => "D1",
            DiscordBranch::D2 => "D2",
        }
    }
}

impl std::fmt::Display for DiscordBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `S(A) + S(B) - S(AB)`.
pub fn mutual_information(rho: &TwoQubitState) -> f64 {
    let s_a = rho.partial_trace(Subsystem::A).entropy();
    let s_b = rho.partial_trace(Subsystem::B).entropy();
    (s_a + s_b - rho.entropy()).max(0.0)
}

/// `sum_k p_k S(rho_A|k)` after measuring B along `dir`.
///
/// Evaluated literally: `(I ⊗ Π_k) rho (I ⊗ Π_k)`, traced over B.
pub fn conditional_entropy_after_measurement(
    rho: &TwoQubitState,
    dir: &MeasurementDirection,
) -> f64 {
    dir.projectors()
        .iter()
        .map(|proj| {
            let lifted = local_operator(proj, Subsystem::B);
            let post = lifted * rho.elements() * lifted;
            let block = partial_trace_matrix(&post, Subsystem::A);
            let p = block.trace().re;
            if p < OUTCOME_PRUNE {
                0.0
            } else {
                p * block_entropy(&block, p)
            }
        })
        .sum()
}

/// Conditional entropy as a function of the direction, with the B-dependence
/// factored out once per state:
/// `Tr_B[(I ⊗ Π±) rho] = (rho_A ± sum_i n_i Tr_B[(I ⊗ σ_i) rho]) / 2`.
struct MeasurementLandscape {
    reduced: Mat2,
    moments: [Mat2; 3],
}

impl MeasurementLandscape {
    fn new(rho: &TwoQubitState) -> Self {
        let reduced = partial_trace_matrix(rho.elements(), Subsystem::A);
        let moments = paulis().map(|s| {
            partial_trace_matrix(
                &(local_operator(&s, Subsystem::B) * rho.elements()),
                Subsystem::A,
            )
        });
        Self { reduced, moments }
    }

    fn conditional_entropy(&self, theta: f64, phi: f64) -> f64 {
        let [x, y, z] = unit_vector(theta, phi);
        let shift = self.moments[0].scale(x) + self.moments[1].scale(y) + self.moments[2].scale(z);
        [1.0, -1.0]
            .iter()
            .map(|&sign| {
                let block = (self.reduced + shift.scale(sign)).scale(0.5);
                let p = block.trace().re;
                if p < OUTCOME_PRUNE {
                    0.0
                } else {
                    p * block_entropy(&block, p)
                }
            })
            .sum()
    }
}

/// Result of the brute-force discord minimization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BruteForceDiscord {
    pub discord: f64,
    pub argmin: MeasurementDirection,
    /// Minimal conditional entropy found.
    pub conditional_entropy: f64,
}

/// Discord by direct minimization of the post-measurement conditional
/// entropy: a fixed 181 × 72 grid over the sphere, then Nelder–Mead from the
/// best grid point. Deterministic.
pub fn discord_bruteforce(rho: &TwoQubitState) -> BruteForceDiscord {
    let landscape = MeasurementLandscape::new(rho);
    let d_theta = PI / (THETA_POINTS - 1) as f64;
    let d_phi = 2.0 * PI / PHI_POINTS as f64;

    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..THETA_POINTS {
        let theta = i as f64 * d_theta;
        for j in 0..PHI_POINTS {
            let phi = j as f64 * d_phi;
            let value = landscape.conditional_entropy(theta, phi);
            if value < best.0 {
                best = (value, theta, phi);
            }
        }
    }

    let refined = nelder_mead(
        |p| landscape.conditional_entropy(p[0], p[1]),
        [best.1, best.2],
        [d_theta, d_phi],
    );
    if refined.0 < best.0 {
        best = (refined.0, refined.1[0], refined.1[1]);
    }

    let s_a = rho.partial_trace(Subsystem::A).entropy();
    let s_b = rho.partial_trace(Subsystem::B).entropy();
    let mutual = s_a + s_b - rho.entropy();
    let classical = s_a - best.0;
    BruteForceDiscord {
        discord: (mutual - classical).max(0.0),
        argmin: MeasurementDirection::new(best.1, best.2),
        conditional_entropy: best.0,
    }
}

/// Minimal two-dimensional Nelder–Mead. Returns `(f_min, x_min)`.
fn nelder_mead(f: impl Fn([f64; 2]) -> f64, start: [f64; 2], step: [f64; 2]) -> (f64, [f64; 2]) {
    const MAX_ITER: usize = 500;
    let mut simplex = [
        start,
        [start[0] + step[0], start[1]],
        [start[0], start[1] + step[1]],
    ];
    let mut values = simplex.map(&f);

    let lerp =
        |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];

    for _ in 0..MAX_ITER {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        simplex = order.map(|k| simplex[k]);
        values = order.map(|k| values[k]);

        let size = (0..2)
            .map(|d| {
                (simplex[1][d] - simplex[0][d])
                    .abs()
                    .max((simplex[2][d] - simplex[0][d]).abs())
            })
            .fold(0.0, f64::max);
        if values[2] - values[0] <= 1e-16 && size < 1e-9 {
            break;
        }

        let centroid = lerp(simplex[0], simplex[1], 0.5);
        let reflected = lerp(centroid, simplex[2], -1.0);
        let fr = f(reflected);
        if fr < values[0] {
            let expanded = lerp(centroid, simplex[2], -2.0);
            let fe = f(expanded);
            if fe < fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
        } else if fr < values[1] {
            simplex[2] = reflected;
            values[2] = fr;
        } else {
            let contracted = if fr < values[2] {
                lerp(centroid, reflected, 0.5)
            } else {
                lerp(centroid, simplex[2], 0.5)
            };
            let fc = f(contracted);
            if fc < values[2].min(fr) {
                simplex[2] = contracted;
                values[2] = fc;
            } else {
                for k in 1..3 {
                    simplex[k] = lerp(simplex[0], simplex[k], 0.5);
                    values[k] = f(simplex[k]);
                }
            }
        }
    }
    let best = (0..3)
        .min_by(|&i, &j| values[i].total_cmp(&values[j]))
        .unwrap();
    (values[best], simplex[best])
}

/// Closed-form discord of a symmetric X state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedDiscord {
    pub discord: f64,
    pub branch: DiscordBranch,
    /// Bloch length of the transversally measured conditional states,
    /// `sqrt((u - v)^2 + 4 y^2) / Z`.
    pub gamma_disc: f64,
    pub d1: f64,
    pub d2: f64,
}

/// `a log2(a / total)` with `0 log 0 = 0`.
fn weighted_log_ratio(a: f64, total: f64) -> f64 {
    if a > 0.0 {
        a * (a / total).log2()
    } else {
        0.0
    }
}

/// Entropies shared by both discord branches: `(S(rho_A), S(rho))`.
fn xstate_entropies(state: &SymXState) -> (f64, f64) {
    let (u, w, y, v) = state.normalized_weights();
    let s_a = entropy_bits(&[u + w, w + v]);
    let s = entropy_bits(&[u, v, (w + y).max(0.0), (w - y).max(0.0)]);
    (s_a, s)
}

/// Discord as the smaller of the `σz` and transverse-measurement branches.
/// Ties resolve to `D1`.
pub fn discord_closed(state: &SymXState) -> ClosedDiscord {
    let (u, w, y, v) = state.normalized_weights();
    let (s_a, s) = xstate_entropies(state);

    let d1 = s_a
        - s
        - (weighted_log_ratio(v, w + v) + weighted_log_ratio(w, w + v))
        - (weighted_log_ratio(u, w + u) + weighted_log_ratio(w, w + u));

    let gamma_disc = ((u - v).powi(2) + 4.0 * y * y).sqrt().min(1.0);
    let d2 = s_a - s + entropy_bits(&[(1.0 - gamma_disc) / 2.0, (1.0 + gamma_disc) / 2.0]);

    let (discord, branch) = if d1 <= d2 {
        (d1, DiscordBranch::D1)
    } else {
        (d2, DiscordBranch::D2)
    };
    ClosedDiscord {
        discord: discord.max(0.0),
        branch,
        gamma_disc,
        d1,
        d2,
    }
}

/// Generic LQU with its correlation matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericLqu {
    pub lqu: f64,
    /// `W_ij = Re Tr{ sqrt(rho) σ_i sqrt(rho) σ_j }`, with `σ_i` acting on the
    /// measured qubit.
    pub w_matrix: Matrix3<f64>,
}

/// `U = 1 - λ_max(W)` from a numerical square root of the state.
pub fn lqu_generic(rho: &TwoQubitState, measured: Subsystem) -> GenericLqu {
    let root = rho.sqrt();
    let locals = paulis().map(|s| local_operator(&s, measured));
    let sandwiched: [Mat4; 3] = locals.map(|s| root * s * root);
    let w_matrix = Matrix3::from_fn(|i, j| {
        let a = (sandwiched[i] * locals[j]).trace().re;
        let b = (sandwiched[j] * locals[i]).trace().re;
        0.5 * (a + b)
    });
    let lambda_max = SymmetricEigen::new(w_matrix)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    GenericLqu {
        lqu: (1.0 - lambda_max).clamp(0.0, 1.0),
        w_matrix,
    }
}

/// Closed-form LQU of a symmetric X state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedLqu {
    pub lqu: f64,
    /// Transverse eigenvalue of `W` (doubly degenerate).
    pub lambda1: f64,
    /// Longitudinal eigenvalue of `W`.
    pub lambda2: f64,
}

pub fn lqu_closed(state: &SymXState) -> ClosedLqu {
    let (u, w, y, v) = state.normalized_weights();
    let root_minus = (w - y).max(0.0).sqrt();
    let root_plus = (w + y).max(0.0).sqrt();
    let even = root_minus / 2.0 + root_plus / 2.0;
    let odd = root_plus / 2.0 - root_minus / 2.0;
    let lambda1 = 2.0 * (u.sqrt() + v.sqrt()) * even;
    let lambda2 = (u + v) + 2.0 * even * even - 2.0 * odd * odd;
    ClosedLqu {
        lqu: (1.0 - lambda1.max(lambda2)).clamp(0.0, 1.0),
        lambda1,
        lambda2,
    }
}

/// All correlation measures of one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub mutual_info: f64,
    pub classical: f64,
    pub discord: f64,
    pub discord_branch: DiscordBranch,
    pub gamma_disc: f64,
    pub lqu: f64,
    pub lambda1: f64,
    pub lambda2: f64,
}

/// Anything a [`CorrelationReport`] can be computed from.
pub trait ReportSource {
    fn report(&self) -> CorrelationReport;
}

impl ReportSource for SymXState {
    fn report(&self) -> CorrelationReport {
        let (s_a, s) = xstate_entropies(self);
        let mutual_info = (2.0 * s_a - s).max(0.0);
        let discord = discord_closed(self);
        let lqu = lqu_closed(self);
        let discord_value = discord.discord.min(mutual_info);
        CorrelationReport {
            mutual_info,
            classical: (mutual_info - discord_value).max(0.0),
            discord: discord_value,
            discord_branch: discord.branch,
            gamma_disc: discord.gamma_disc,
            lqu: lqu.lqu,
            lambda1: lqu.lambda1,
            lambda2: lqu.lambda2,
        }
    }
}

/// Generic route: brute-force discord and the `W`-matrix LQU. The reported
/// `lambda1`/`lambda2` are `W_xx` and `W_zz`, and `gamma_disc` is read off
/// the X-pattern entries; both coincide with the closed forms on X states.
impl ReportSource for TwoQubitState {
    fn report(&self) -> CorrelationReport {
        let mutual_info = mutual_information(self);
        let discord = discord_bruteforce(self);
        let discord_value = discord.discord.min(mutual_info);
        let lqu = lqu_generic(self, Subsystem::A);
        let m = self.elements();
        let gamma_disc = ((m[(0, 0)].re - m[(3, 3)].re).powi(2) + 4.0 * m[(1, 2)].norm_sqr())
            .sqrt()
            .min(1.0);
        CorrelationReport {
            mutual_info,
            classical: (mutual_info - discord_value).max(0.0),
            discord: discord_value,
            discord_branch: discord.argmin.branch(),
            gamma_disc,
            lqu: lqu.lqu,
            lambda1: lqu.w_matrix[(0, 0)],
            lambda2: lqu.w_matrix[(2, 2)],
        }
    }
}

/// Closed forms for [`SymXState`], generic routes for dense states.
pub fn full_report(source: &impl ReportSource) -> CorrelationReport {
    source.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{thermal_state_closed, DotParams};
    use crate::qmath::SingleQubitState;

    fn thermal() -> SymXState {
        thermal_state_closed(&DotParams::new(10.0, 1.0, 0.4).unwrap()).unwrap()
    }

    fn product() -> TwoQubitState {
        let a = SingleQubitState::from_bloch(0.2, 0.1, -0.5).unwrap();
        let b = SingleQubitState::from_bloch(-0.3, 0.4, 0.6).unwrap();
        TwoQubitState::product(&a, &b).unwrap()
    }

    #[test]
    fn mutual_information_examples() {
        assert!(mutual_information(&TwoQubitState::maximally_mixed()).abs() < 1e-12);
        assert!((mutual_information(&TwoQubitState::singlet()) - 2.0).abs() < 1e-12);
        let classical = TwoQubitState::from_real_rows([
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.5],
        ])
        .unwrap();
        assert!((mutual_information(&classical) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn conditional_entropy_of_product_and_singlet() {
        let rho = product();
        let s_a = rho.partial_trace(Subsystem::A).entropy();
        for (theta, phi) in [(0.0, 0.0), (1.0, 2.0), (PI / 2.0, 0.3)] {
            let dir = MeasurementDirection::new(theta, phi);
            assert!((conditional_entropy_after_measurement(&rho, &dir) - s_a).abs() < 1e-12);
            let singlet = TwoQubitState::singlet();
            assert!(conditional_entropy_after_measurement(&singlet, &dir).abs() < 1e-12);
        }
    }

    #[test]
    fn landscape_matches_literal_sandwich() {
        let rho = thermal().to_dense();
        let landscape = MeasurementLandscape::new(&rho);
        for (theta, phi) in [(0.0, 0.0), (0.7, 1.1), (PI / 2.0, 0.0), (2.5, 4.0)] {
            let fast = landscape.conditional_entropy(theta, phi);
            let slow =
                conditional_entropy_after_measurement(&rho, &MeasurementDirection::new(theta, phi));
            assert!((fast - slow).abs() < 1e-13);
        }
    }

    #[test]
    fn sigma_z_measurement_reproduces_d1() {
        let state = thermal();
        let rho = state.to_dense();
        let cond = conditional_entropy_after_measurement(&rho, &MeasurementDirection::z());
        let s_a = rho.partial_trace(Subsystem::A).entropy();
        let d1_assembled = mutual_information(&rho) - (s_a - cond);
        assert!((d1_assembled - discord_closed(&state).d1).abs() < 1e-12);
    }

    #[test]
    fn direction_canonicalization() {
        let d = MeasurementDirection::new(-0.3, 0.0);
        assert!((d.theta() - 0.3).abs() < 1e-15);
        assert!((d.phi() - PI).abs() < 1e-15);
        let d = MeasurementDirection::new(1.0, -0.5);
        assert!((d.phi() - (2.0 * PI - 0.5)).abs() < 1e-14);
        assert_eq!(
            MeasurementDirection::new(0.1, 0.0).branch(),
            DiscordBranch::D1
        );
        assert_eq!(
            MeasurementDirection::new(1.5, 0.0).branch(),
            DiscordBranch::D2
        );
    }

    #[test]
    fn bruteforce_examples() {
        assert!(discord_bruteforce(&product()).discord < 1e-9);
        let singlet = discord_bruteforce(&TwoQubitState::singlet());
        assert!((singlet.discord - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bruteforce_matches_closed_form_on_thermal_state() {
        let state = thermal();
        let brute = discord_bruteforce(&state.to_dense());
        let closed = discord_closed(&state);
        assert!((brute.discord - closed.discord).abs() < 1e-6);
        assert_eq!(brute.argmin.branch(), closed.branch);
    }

    #[test]
    fn branch_matches_bruteforce_direction() {
        let mut seen = [false; 2];
        for k0 in [-10.0, -5.0, -1.0, 1.0, 5.0, 10.0] {
            for r in [0.0, 0.5, 1.0, 2.0, 5.0] {
                for t in [0.2, 0.4, 1.0, 2.0, 4.0] {
                    let thermal = thermal_state_closed(&DotParams::new(k0, r, t).unwrap()).unwrap();
                    // Halving the coherence pushes many states onto D1.
                    for state in [thermal, thermal.with_y(0.5 * thermal.y()).unwrap()] {
                        let closed = discord_closed(&state);
                        // Near a tie, or with no correlations left, the argmin is arbitrary.
                        if (closed.d1 - closed.d2).abs() < 1e-6 || closed.discord < 1e-6 {
                            continue;
                        }
                        let brute = discord_bruteforce(&state.to_dense());
                        assert_eq!(brute.argmin.branch(), closed.branch, "k0={k0} r={r} T={t}");
                        seen[(closed.branch == DiscordBranch::D2) as usize] = true;
                    }
                }
            }
        }
        assert_eq!(seen, [true, true], "both branches should occur on the grid");
    }

    #[test]
    fn closed_discord_limits() {
        let mixed = SymXState::new(1.0, 1.0, 0.0, 1.0).unwrap();
        assert!(discord_closed(&mixed).discord.abs() < 1e-12);
        let singlet = SymXState::new(0.0, 0.5, -0.5, 0.0).unwrap();
        let d = discord_closed(&singlet);
        assert!((d.discord - 1.0).abs() < 1e-12);
        // Exact tie between the branches resolves to D1.
        assert_eq!(d.branch, DiscordBranch::D1);
    }

    #[test]
    fn lqu_examples() {
        let mixed = SymXState::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let l = lqu_closed(&mixed);
        assert!((l.lambda1 - 1.0).abs() < 1e-15 && (l.lambda2 - 1.0).abs() < 1e-15);
        assert!(l.lqu.abs() < 1e-15);

        let singlet = SymXState::new(0.0, 0.5, -0.5, 0.0).unwrap();
        let l = lqu_closed(&singlet);
        assert!(l.lambda1.abs() < 1e-15 && l.lambda2.abs() < 1e-15);
        assert!((l.lqu - 1.0).abs() < 1e-15);

        let pure_product = TwoQubitState::basis(1);
        assert!(lqu_generic(&pure_product, Subsystem::A).lqu.abs() < 1e-12);
        let g = lqu_generic(&TwoQubitState::singlet(), Subsystem::A);
        assert!((g.lqu - 1.0).abs() < 1e-12);
        assert!(g.w_matrix.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn lqu_routes_agree_on_thermal_state() {
        let state = thermal();
        let closed = lqu_closed(&state);
        let generic = lqu_generic(&state.to_dense(), Subsystem::A);
        assert!((closed.lqu - generic.lqu).abs() < 1e-9);
        assert!((closed.lambda1 - generic.w_matrix[(0, 0)]).abs() < 1e-9);
        assert!((closed.lambda1 - generic.w_matrix[(1, 1)]).abs() < 1e-9);
        assert!((closed.lambda2 - generic.w_matrix[(2, 2)]).abs() < 1e-9);
    }

    #[test]
    fn report_examples() {
        let r = full_report(&TwoQubitState::maximally_mixed());
        assert!(r.mutual_info.abs() < 1e-12 && r.discord.abs() < 1e-12 && r.lqu.abs() < 1e-12);
        assert!(r.classical.abs() < 1e-12);

        let r = full_report(&TwoQubitState::singlet());
        assert!((r.mutual_info - 2.0).abs() < 1e-9);
        assert!((r.classical - 1.0).abs() < 1e-9);
        assert!((r.discord - 1.0).abs() < 1e-9);
        assert!((r.lqu - 1.0).abs() < 1e-9);
    }

    #[test]
    fn dense_and_closed_reports_agree() {
        let state = thermal();
        let closed = full_report(&state);
        let dense = full_report(&state.to_dense());
        assert!((closed.mutual_info - dense.mutual_info).abs() < 1e-12);
        assert!((closed.discord - dense.discord).abs() < 1e-6);
        assert!((closed.lqu - dense.lqu).abs() < 1e-9);
        assert!((closed.gamma_disc - dense.gamma_disc).abs() < 1e-12);
        assert_eq!(closed.discord_branch, dense.discord_branch);
    }
}
