//! Closed forms against the statevector engine and hand-derived values.

use approx::assert_abs_diff_eq;
use grover_ent::entanglement::{
    concurrence_from_spectrum, concurrence_post_oracle, concurrence_state, oracle_entanglement_gain,
    schmidt_coefficients, schmidt_vectors, Cut, PartitionSpec,
};
use grover_ent::grover::{amplitude_closed_form, SearchParams};
use grover_ent::statevector::{
    apply_oracle, concurrence_numeric, grover_run, schmidt_numeric, schmidt_spectrum, uniform_state,
    QubitSubset,
};

#[test]
fn n4_exact_spectrum_from_both_engines() {
    let params = SearchParams::new(4, &[0]).unwrap();
    let cut = Cut::Qubits(PartitionSpec::new(2, 4).unwrap());
    let (plus, minus) = schmidt_coefficients(1, &params, cut).unwrap();
    let mu = schmidt_spectrum(&grover_run(4, &[0], 1).unwrap(), &QubitSubset::first(2, 4).unwrap()).unwrap();
    assert_abs_diff_eq!(plus, 0.5 + 175f64.sqrt() / 32.0, epsilon = 1e-14);
    assert_abs_diff_eq!(minus, 0.5 - 175f64.sqrt() / 32.0, epsilon = 1e-14);
    assert_abs_diff_eq!(mu[0], plus, epsilon = 1e-12);
    assert_abs_diff_eq!(mu[1], minus, epsilon = 1e-12);
    assert_abs_diff_eq!(concurrence_from_spectrum(&[plus, minus]).unwrap(), 9.0 / 16.0, epsilon = 1e-14);
}

#[test]
fn post_oracle_concurrence_matches_simulation() {
    for (n, target, l) in [(4u32, 0u64, 2u32), (6, 45, 2), (7, 3, 5)] {
        let params = SearchParams::new(n, &[target]).unwrap();
        let spec = PartitionSpec::new(l, n).unwrap();
        let keep = QubitSubset::first(l, n).unwrap();
        for k in 0..=params.last_first_quadrant_iteration() {
            let s = apply_oracle(&grover_run(n, &[target], k).unwrap(), &[target]).unwrap();
            let analytic = concurrence_post_oracle(k, &params, Cut::Qubits(spec)).unwrap();
            assert_abs_diff_eq!(concurrence_numeric(&s, &keep).unwrap(), analytic, epsilon = 1e-10);
        }
    }
    let params = SearchParams::new(4, &[0]).unwrap();
    let cut = Cut::Qubits(PartitionSpec::new(2, 4).unwrap());
    assert_abs_diff_eq!(concurrence_post_oracle(1, &params, cut).unwrap(), 63.0 / 64.0, epsilon = 1e-14);
    assert_abs_diff_eq!(oracle_entanglement_gain(1, &params, cut).unwrap(), 27.0 / 64.0, epsilon = 1e-14);
}

#[test]
fn oracle_gives_minus_a0_on_target() {
    let s = apply_oracle(&uniform_state(5).unwrap(), &[9]).unwrap();
    let params = SearchParams::new(5, &[9]).unwrap();
    assert_abs_diff_eq!(s.amplitude(9).re, -params.a0(), epsilon = 1e-15);
}

#[test]
fn amplitudes_match_simulation_beyond_first_quadrant() {
    for (n, marked) in [(6u32, vec![11u64]), (9, vec![1, 2, 3]), (12, vec![4000])] {
        let params = SearchParams::new(n, &marked).unwrap();
        let k_max = 2 * grover_ent::grover::optimal_iterations(&params);
        for k in [0, 1, k_max / 2, k_max] {
            let s = grover_run(n, &marked, k).unwrap();
            let (a, _, _) = s.project_2d(&marked).unwrap();
            assert_abs_diff_eq!(a.re, amplitude_closed_form(k, &params).a, epsilon = 1e-10);
        }
    }
}

#[test]
fn analytic_schmidt_vectors_reconstruct_the_simulated_state() {
    let params = SearchParams::new(4, &[0]).unwrap();
    let spec = PartitionSpec::new(2, 4).unwrap();
    let psi = schmidt_vectors(1, &params, spec).unwrap().reconstruct().unwrap();
    let s = grover_run(4, &[0], 1).unwrap();
    for (x, y) in psi.iter().zip(s.amplitudes()) {
        assert!((x - y).norm() < 1e-10);
    }
    for k in 0..6 {
        let params = SearchParams::new(6, &[22]).unwrap();
        let spec = PartitionSpec::new(3, 6).unwrap();
        let psi = schmidt_vectors(k, &params, spec).unwrap().reconstruct().unwrap();
        let s = grover_run(6, &[22], k).unwrap();
        for (x, y) in psi.iter().zip(s.amplitudes()) {
            assert!((x - y).norm() < 1e-10, "k={k}");
        }
    }
}

#[test]
fn absolute_form_tracks_simulation_past_the_target() {
    let params = SearchParams::new(8, &[200]).unwrap();
    for l in [1, 4, 7] {
        let keep = QubitSubset::first(l, 8).unwrap();
        let cut = Cut::Qubits(PartitionSpec::new(l, 8).unwrap());
        for k in 0..=30 {
            let numeric = concurrence_numeric(&grover_run(8, &[200], k).unwrap(), &keep).unwrap();
            assert_abs_diff_eq!(concurrence_state(k, &params, cut).unwrap(), numeric, epsilon = 1e-10);
        }
    }
}

#[test]
fn ghz_like_target_spectrum() {
    let s = grover_run(3, &[0, 7], 1).unwrap();
    let data = schmidt_numeric(&s, &QubitSubset::new(&[0, 1], 3).unwrap()).unwrap();
    assert_abs_diff_eq!(data.coefficients[0], 0.5, epsilon = 1e-12);
    assert_abs_diff_eq!(data.coefficients[1], 0.5, epsilon = 1e-12);
    assert_abs_diff_eq!(data.concurrence(), 1.0, epsilon = 1e-12);
}
