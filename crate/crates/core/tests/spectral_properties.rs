use approx::assert_abs_diff_eq;
use gwp::spectral::{self, sample_times};
use gwp::{
    BasisSpec, Exec, GaussianParams, HamiltonianMatrix, Mode, QuarticPotential, SpectralSolver, Tdva, TdvaState,
};
use proptest::prelude::*;

fn sdw() -> QuarticPotential {
    QuarticPotential::symmetric_double_well(1.0, 1.0, 2.0 * std::f64::consts::SQRT_2).unwrap()
}

fn basis(n: usize) -> BasisSpec {
    BasisSpec::new(1.0, 1.0, 1.0, n).unwrap()
}

#[test]
fn eigenvectors_are_orthonormal_and_diagonalize() {
    let h = HamiltonianMatrix::build(basis(30), sdw()).unwrap();
    let eig = h.eigensolve().unwrap();
    let v = &eig.eigenvectors;
    let vtv = v.transpose().matmul(v);
    let hv = v.transpose().matmul(&h.elements.matmul(v));
    for i in 0..v.dim() {
        for j in 0..v.dim() {
            let id = if i == j { 1.0 } else { 0.0 };
            assert!((vtv[(i, j)] - id).abs() < 1e-12);
            let d = if i == j { eig.eigenvalues[i] } else { 0.0 };
            assert!((hv[(i, j)] - d).abs() < 1e-10, "({i},{j}) {}", hv[(i, j)]);
        }
    }
    assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn symmetric_well_has_parity_doublets() {
    let solver = SpectralSolver::new(basis(30), sdw()).unwrap();
    // Even states only couple even basis functions.
    for nu in 0..4 {
        let v = solver.eigen.eigenvectors.column(nu);
        let even: f64 = v.iter().step_by(2).map(|c| c * c).sum();
        assert!(!(1e-20..=1.0 - 1e-12).contains(&even), "state {nu}: even weight {even}");
    }
}

#[test]
fn harmonic_well_keeps_the_gaussian_exact() {
    // A Gaussian in a harmonic well stays Gaussian, so the spectral
    // solution and the variational one must coincide.
    let u = QuarticPotential::harmonic(1.0, 1.3);
    let g = GaussianParams::new(1.2, -0.4, 0.3, 0.2).unwrap();
    let solver = SpectralSolver::new(basis(60), u).unwrap();
    let s0 = solver.project(&g).unwrap();
    let sm = solver.time_series(&s0, &sample_times(10.0, 0.5, true), Exec::Sequential);
    let tdva = Tdva::new(u, 1.0, 1.0).unwrap();
    let t0 = TdvaState::from_gaussian(&g, 0.0);
    let traj = tdva.integrate(&t0, 10.0, 1e-3, 0.5, Mode::Full).unwrap();
    for (a, s) in sm.iter().zip(&traj) {
        let b = tdva.observables(s, &t0, Mode::Full);
        assert_abs_diff_eq!(a.x_mean, b.x_mean, epsilon = 1e-7);
        assert_abs_diff_eq!(a.p_mean, b.p_mean, epsilon = 1e-7);
        assert_abs_diff_eq!(a.dx2, b.dx2, epsilon = 1e-7);
        assert_abs_diff_eq!(a.dp2, b.dp2, epsilon = 1e-7);
        assert_abs_diff_eq!(a.sym, b.sym, epsilon = 1e-7);
        assert_abs_diff_eq!(a.corr2, b.corr2, epsilon = 1e-7);
    }
}

#[test]
fn rk4_propagation_matches_the_eigen_route() {
    let solver = SpectralSolver::new(basis(30), sdw()).unwrap();
    let g = GaussianParams::new(0.0, 0.5, 0.1, 0.0).unwrap();
    let s0 = solver.project(&g).unwrap();
    let exact = solver.propagator(&s0).at(20.0);
    let rk = spectral::propagate_rk4(&s0, &solver.hamiltonian, 20.0, 0.002).unwrap();
    let err = exact
        .coeffs
        .iter()
        .zip(&rk.coeffs)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    assert!(err < 1e-6, "{err}");
}

#[test]
fn sequential_and_parallel_series_are_identical() {
    let solver = SpectralSolver::new(basis(30), sdw()).unwrap();
    let s0 = solver
        .project(&GaussianParams::new(-1.0, 0.2, 0.1, 0.0).unwrap())
        .unwrap();
    let times = sample_times(50.0, 0.5, true);
    let a = solver.time_series(&s0, &times, Exec::Sequential);
    let b = solver.time_series(&s0, &times, Exec::Parallel);
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn propagation_is_unitary_and_conserves_energy(
        x0 in -3.0f64..3.0,
        p0 in -1.0f64..1.0,
        mu0 in 0.05f64..0.5,
        t in 0.0f64..2000.0,
    ) {
        let solver = SpectralSolver::new(basis(30), sdw()).unwrap();
        let s0 = solver.project(&GaussianParams::new(x0, p0, mu0, 0.0).unwrap()).unwrap();
        let r0 = spectral::observables(&s0, &s0, &solver.basis, &solver.hamiltonian);
        let st = solver.propagator(&s0).at(t);
        let rt = spectral::observables(&st, &s0, &solver.basis, &solver.hamiltonian);
        prop_assert!((rt.norm - r0.norm).abs() < 1e-12);
        prop_assert!((rt.energy - r0.energy).abs() < 1e-10 * r0.energy.abs().max(1.0));
        prop_assert!(rt.corr2 <= rt.norm * r0.norm + 1e-12);
        // Robertson-Schroedinger bound.
        prop_assert!(rt.dx2 * rt.dp2 >= (1.0 + rt.sym * rt.sym) / 4.0 - 1e-6);
    }

    #[test]
    fn projection_reproduces_the_gaussian_moments(
        x0 in -2.0f64..2.0,
        p0 in -1.0f64..1.0,
        mu0 in 0.2f64..1.0,
        alpha0 in -0.5f64..0.5,
    ) {
        let b = basis(60);
        let g = GaussianParams::new(x0, p0, mu0, alpha0).unwrap();
        let h = HamiltonianMatrix::build(b, sdw()).unwrap();
        let s0 = spectral::project_initial(&g, &b).unwrap();
        let r = spectral::observables(&s0, &s0, &b, &h);
        prop_assert!((r.norm - 1.0).abs() < 1e-8);
        prop_assert!((r.x_mean - x0).abs() < 1e-7);
        prop_assert!((r.p_mean - p0).abs() < 1e-7);
        prop_assert!((r.dx2 - g.dx2()).abs() < 1e-6);
        prop_assert!((r.dp2 - g.dp2(1.0)).abs() < 1e-6);
        prop_assert!((r.sym - alpha0).abs() < 1e-6);
    }
}
