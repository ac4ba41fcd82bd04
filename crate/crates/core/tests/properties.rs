use proptest::prelude::*;

use ramsey_forge::certify::{ramsey_certificate, recheck_ramsey, Certificate, Status, Value};
use ramsey_forge::exactmetrics::{cut_size, triangle_count};
use ramsey_forge::graphs::{build, export_graph, read_dimacs, ExportFormat};
use ramsey_forge::spectral::{dense_spectrum, rayleigh_quotient, SpectralSummary};
use ramsey_forge::{FamilySpec, Graph, Limits};

fn d5() -> (Graph, SpectralSummary) {
    let g = build(&FamilySpec::euclidean(5, 2, 1).unwrap(), 10_000).unwrap();
    let s = dense_spectrum(&g, 100, 100).unwrap();
    (g, s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rayleigh_between_laplacian_extremes(x in prop::collection::vec(-10.0f64..10.0, 25)) {
        let (g, s) = d5();
        if let Ok(r) = rayleigh_quotient(&g, &x) {
            prop_assert!(r >= s.theta2 - 1e-9 && r <= s.theta_n + 1e-9, "{r} not in [{}, {}]", s.theta2, s.theta_n);
        }
    }

    #[test]
    fn cut_within_spectral_window(mask in 1u32..(1 << 25) - 1) {
        let (g, s) = d5();
        let set: Vec<usize> = (0..25).filter(|v| mask >> v & 1 == 1).collect();
        let k = set.len() as f64;
        let scale = k * (25.0 - k) / 25.0;
        let cut = cut_size(&g, &set) as f64;
        prop_assert!(cut >= s.theta2 * scale - 1e-9);
        prop_assert!(cut <= s.theta_n * scale + 1e-9);
    }

    #[test]
    fn dimacs_round_trip(q in prop::sample::select(vec![3u32, 5, 7, 11]), a in 1u32..11) {
        let family = FamilySpec::euclidean(q, 2, a % q).unwrap_or(FamilySpec::euclidean(q, 2, 1).unwrap());
        let g = build(&family, 10_000).unwrap();
        let mut buf = Vec::new();
        export_graph(&g, ExportFormat::Dimacs, &mut buf).unwrap();
        let back = read_dimacs(buf.as_slice()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(triangle_count(&back), triangle_count(&g));
    }
}

#[test]
fn ramsey_certificate_survives_json() {
    let g = build(&FamilySpec::euclidean(7, 2, 1).unwrap(), 10_000).unwrap();
    let cert = ramsey_certificate(g.clone(), &Limits::default()).unwrap();
    assert_eq!(cert.status, Status::Pass);
    let r = cert.ramsey.as_ref().unwrap();
    assert_eq!((r.s, r.t, r.n), (3, 15, 49));

    let text = serde_json::to_string_pretty(&cert).unwrap();
    let back: Certificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    assert!(back.recheck().is_empty());
    assert!(recheck_ramsey(&back, &g).is_ok());

    let mut forged = back.clone();
    forged.ramsey.as_mut().unwrap().alpha_bound = Value::Int(9);
    assert!(!forged.recheck().is_empty());

    let mut forged = back;
    let w = forged.ramsey.as_mut().unwrap().witness.as_mut().unwrap();
    w[1] = g.neighbors(w[0])[0] as usize;
    assert!(recheck_ramsey(&forged, &g).is_err());
}

#[test]
fn ramsey_rejects_other_graphs() {
    let d7 = build(&FamilySpec::euclidean(7, 2, 1).unwrap(), 10_000).unwrap();
    let cert = ramsey_certificate(d7, &Limits::default()).unwrap();
    assert!(recheck_ramsey(&cert, &Graph::cycle(50)).is_err());
    let mut with_triangle: Vec<(usize, usize)> = (0..49).map(|v| (v, (v + 1) % 49)).collect();
    with_triangle.extend([(0, 2)]);
    assert!(recheck_ramsey(&cert, &Graph::from_edges(49, &with_triangle).unwrap()).is_err());
    assert!(ramsey_certificate(Graph::complete(4), &Limits::default()).is_err());
}
