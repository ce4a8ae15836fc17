use nalgebra::{Complex, Matrix2, Matrix4};
use proptest::prelude::*;

use qdot::channels::{evolve_with_gamma, evolve_xstate, two_qubit_kraus, ChannelKind};
use qdot::correlations::{discord_closed, lqu_closed, lqu_generic};
use qdot::model::{thermal_state_closed, DotParams};
use qdot::qmath::{
    apply_kraus, matrix_sqrt, max_abs_diff, spectral_decompose, Mat2, Mat4, SingleQubitState,
    Subsystem, TwoQubitState,
};

fn complex_entries(n: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n)
}

/// `G G† / Tr(G G†)` for a random complex `G`.
fn density_matrix() -> impl Strategy<Value = TwoQubitState> {
    complex_entries(16).prop_filter_map("degenerate sample", |e| {
        let g = Matrix4::from_fn(|i, j| Complex::new(e[4 * i + j].0, e[4 * i + j].1));
        let m = g * g.adjoint();
        let t = m.trace().re;
        (t > 1e-3)
            .then(|| TwoQubitState::new(m.unscale(t)).ok())
            .flatten()
    })
}

fn qubit_state() -> impl Strategy<Value = SingleQubitState> {
    complex_entries(4).prop_filter_map("degenerate sample", |e| {
        let g = Matrix2::from_fn(|i, j| Complex::new(e[2 * i + j].0, e[2 * i + j].1));
        let m: Mat2 = g * g.adjoint();
        let t = m.trace().re;
        (t > 1e-3)
            .then(|| SingleQubitState::new(m.unscale(t)).ok())
            .flatten()
    })
}

/// `exp(iH)` for a random Hermitian `H`.
fn unitary() -> impl Strategy<Value = Mat4> {
    complex_entries(16).prop_map(|e| {
        let g = Matrix4::from_fn(|i, j| Complex::new(e[4 * i + j].0, e[4 * i + j].1));
        let h = (g + g.adjoint()).scale(0.5);
        let s = spectral_decompose(&h).unwrap();
        let phases = Mat4::from_diagonal(&nalgebra::Vector4::from_fn(|k, _| {
            Complex::from_polar(1.0, s.eigenvalues()[k])
        }));
        s.eigenvectors() * phases * s.eigenvectors().adjoint()
    })
}

fn thermal_params() -> impl Strategy<Value = DotParams> {
    (-10.0..10.0f64, -5.0..5.0f64, 0.2..4.0f64)
        .prop_map(|(k0, r, t)| DotParams::new(k0, r, t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_reconstructs(rho in density_matrix()) {
        let s = spectral_decompose(rho.elements()).unwrap();
        prop_assert!(max_abs_diff(&s.reconstruct(), rho.elements()) <= 1e-12);
        let gram = s.eigenvectors().adjoint() * s.eigenvectors();
        prop_assert!(max_abs_diff(&gram, &Mat4::identity()) <= 1e-12);
        let e = s.eigenvalues();
        prop_assert!(e.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn sqrt_squares_back(rho in density_matrix()) {
        let root = matrix_sqrt(rho.elements()).unwrap();
        prop_assert!(max_abs_diff(&(root * root), rho.elements()) <= 1e-10);
        let s = spectral_decompose(&root).unwrap();
        prop_assert!(s.eigenvalues().iter().all(|&l| l >= -1e-12));
    }

    #[test]
    fn entropy_is_unitarily_invariant(rho in density_matrix(), u in unitary()) {
        let rotated = TwoQubitState::new(u * rho.elements() * u.adjoint()).unwrap();
        prop_assert!((rotated.entropy() - rho.entropy()).abs() <= 1e-10);
        prop_assert!(rho.entropy() >= 0.0 && rho.entropy() <= 2.0 + 1e-12);
    }

    #[test]
    fn partial_trace_of_product(a in qubit_state(), b in qubit_state()) {
        let rho = TwoQubitState::product(&a, &b).unwrap();
        prop_assert!(max_abs_diff(rho.partial_trace(Subsystem::A).elements(), a.elements()) <= 1e-12);
        prop_assert!(max_abs_diff(rho.partial_trace(Subsystem::B).elements(), b.elements()) <= 1e-12);
    }

    #[test]
    fn kraus_preserves_trace(rho in density_matrix(), gamma in 0.0..=1.0f64, damping in any::<bool>()) {
        let kind = if damping { ChannelKind::AmplitudeDamping } else { ChannelKind::Dephasing };
        let out = apply_kraus(&rho, &two_qubit_kraus(kind, gamma).unwrap()).unwrap();
        prop_assert!((out.elements().trace().re - 1.0).abs() <= 1e-12);
        prop_assert!(out.spectrum().eigenvalues().iter().all(|&l| l >= 0.0));
    }

    #[test]
    fn dephasing_keeps_populations(rho in density_matrix(), gamma in 0.0..=1.0f64) {
        let out = evolve_with_gamma(&rho, ChannelKind::Dephasing, gamma).unwrap();
        for k in 0..4 {
            prop_assert!((out.elements()[(k, k)] - rho.elements()[(k, k)]).norm() <= 1e-15);
        }
    }

    #[test]
    fn channel_semigroup(p in thermal_params(), g1 in 0.0..=1.0f64, g2 in 0.0..=1.0f64, damping in any::<bool>()) {
        let kind = if damping { ChannelKind::AmplitudeDamping } else { ChannelKind::Dephasing };
        let state = thermal_state_closed(&p).unwrap();
        let composed = 1.0 - (1.0 - g1) * (1.0 - g2);
        let twice = evolve_xstate(&evolve_xstate(&state, kind, g1).unwrap(), kind, g2).unwrap();
        let once = evolve_xstate(&state, kind, composed).unwrap();
        prop_assert!(max_abs_diff(&twice.to_matrix(), &once.to_matrix()) <= 1e-12);

        let rho = state.to_dense();
        let twice = evolve_with_gamma(&evolve_with_gamma(&rho, kind, g1).unwrap(), kind, g2).unwrap();
        let once = evolve_with_gamma(&rho, kind, composed).unwrap();
        prop_assert!(max_abs_diff(twice.elements(), once.elements()) <= 1e-12);
    }

    #[test]
    fn field_reversal_symmetry(p in thermal_params()) {
        let fwd = thermal_state_closed(&p).unwrap();
        let rev = thermal_state_closed(&p.with_reversed_field()).unwrap();
        prop_assert!((discord_closed(&fwd).discord - discord_closed(&rev).discord).abs() <= 1e-10);
        prop_assert!((lqu_closed(&fwd).lqu - lqu_closed(&rev).lqu).abs() <= 1e-10);
    }

    #[test]
    fn measured_side_is_immaterial(p in thermal_params()) {
        let rho = thermal_state_closed(&p).unwrap().to_dense();
        let a = lqu_generic(&rho, Subsystem::A).lqu;
        let b = lqu_generic(&rho, Subsystem::B).lqu;
        prop_assert!((a - b).abs() <= 1e-9);
    }

    #[test]
    fn report_invariants(p in thermal_params(), gamma in 0.0..=1.0f64, damping in any::<bool>()) {
        let kind = if damping { ChannelKind::AmplitudeDamping } else { ChannelKind::Dephasing };
        let state = evolve_xstate(&thermal_state_closed(&p).unwrap(), kind, gamma).unwrap();
        let r = qdot::full_report(&state);
        prop_assert!(r.discord >= 0.0 && r.discord <= r.mutual_info + 1e-9);
        prop_assert!(r.classical >= -1e-9);
        prop_assert!((r.classical - (r.mutual_info - r.discord)).abs() <= 1e-9);
        prop_assert!((0.0..=1.0).contains(&r.lqu));
        prop_assert!((0.0..=1.0).contains(&r.gamma_disc));
    }
}

#[test]
fn diagonal_states_carry_no_quantum_correlation() {
    for (u, w, v) in [
        (0.1, 0.3, 0.3),
        (1.0, 2.0, 0.5),
        (0.0, 0.5, 0.0),
        (3.0, 0.0, 1.0),
    ] {
        let s = qdot::SymXState::new(u, w, 0.0, v).unwrap();
        assert!(discord_closed(&s).discord <= 1e-9);
        assert!(lqu_closed(&s).lqu <= 1e-9);
        let dense = s.to_dense();
        assert!(qdot::discord_bruteforce(&dense).discord <= 1e-9);
        assert!(lqu_generic(&dense, Subsystem::A).lqu <= 1e-9);
    }
}

#[test]
fn bruteforce_never_exceeds_any_grid_direction() {
    use qdot::correlations::conditional_entropy_after_measurement;
    use qdot::MeasurementDirection;
    let rho = thermal_state_closed(&DotParams::new(5.0, 0.5, 1.0).unwrap())
        .unwrap()
        .to_dense();
    let brute = qdot::discord_bruteforce(&rho);
    for i in 0..=18 {
        for j in 0..12 {
            let dir = MeasurementDirection::new(
                i as f64 * std::f64::consts::PI / 18.0,
                j as f64 * std::f64::consts::PI / 6.0,
            );
            assert!(brute.conditional_entropy <= conditional_entropy_after_measurement(&rho, &dir));
        }
    }
}
