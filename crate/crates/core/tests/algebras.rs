mod common;

use common::instance;
use gsym_core::algebra::{nakayama, trace_dual, Algebra, GroupAction};
use gsym_core::twocat::*;
use gsym_core::{Error, Scalar};

fn all_examples() -> Vec<(&'static str, Algebra, GroupAction)> {
    let mut out = Vec::new();
    for (name, r) in [
        ("cyclic 2", cyclic_example(2)),
        ("cyclic 3", cyclic_example(3)),
        ("cyclic 4", cyclic_example(4)),
        ("dual numbers", dual_numbers(2)),
        ("dual numbers Z/4", dual_numbers(4)),
        ("klein", klein_example()),
        ("order-4 example", section7_example(4)),
        ("A2", hereditary_a2()),
    ] {
        let (a, act) = r.unwrap();
        out.push((name, a, act));
    }
    out
}

#[test]
fn truncated_cyclic_quiver_has_square_dimension() {
    for n in 2..=5 {
        let (a, _) = cyclic_example(n).unwrap();
        assert_eq!(a.dim, n * n);
        assert_eq!(a.nblocks, 1);
        assert!(a.cartan().iter().flatten().all(|&c| c == 1));
    }
}

#[test]
fn multiplication_is_associative() {
    for (name, a, _) in all_examples() {
        assert!(a.check_associative(), "{name}");
    }
}

#[test]
fn group_acts_by_algebra_automorphisms() {
    for (name, a, act) in all_examples() {
        for g in act.group.elements() {
            for u in 0..a.dim {
                for v in 0..a.dim {
                    let lhs = act.apply(g, &a.mult[u][v]);
                    let rhs = a.mul(&act.apply(g, &a.unit_vec(u)), &act.apply(g, &a.unit_vec(v)));
                    assert_eq!(lhs, rhs, "{name}: element {g} on basis pair ({u}, {v})");
                }
            }
        }
    }
}

#[test]
fn cyclic_nakayama_shifts_vertices() {
    for n in 2..=5 {
        let (a, _) = cyclic_example(n).unwrap();
        let nak = nakayama(&a).unwrap();
        let want: Vec<usize> = (0..n).map(|e| (e + 1) % n).collect();
        assert_eq!(nak.nu, want);
        assert!(!nak.weakly_symmetric);
    }
}

#[test]
fn nakayama_of_local_and_order_four_examples() {
    let (a, _) = dual_numbers(2).unwrap();
    assert!(nakayama(&a).unwrap().weakly_symmetric);
    let (a, _) = section7_example(4).unwrap();
    let nak = nakayama(&a).unwrap();
    // A e_1 = span(e_1, a) has socle S_2
    assert_eq!(nak.nu, vec![1, 0]);
}

#[test]
fn non_self_injective_algebras_are_detected() {
    let (a, _) = hereditary_a2().unwrap();
    assert_eq!(nakayama(&a), Err(Error::NotSelfInjective));
    let (a, _) = klein_example().unwrap();
    assert_eq!(nakayama(&a), Err(Error::NotSelfInjective));
}

#[test]
fn dual_basis_is_dual_for_the_trace_form() {
    for (name, a, _) in all_examples() {
        let Ok(nak) = nakayama(&a) else { continue };
        let td = trace_dual(&a, &nak).unwrap();
        for x in 0..a.dim {
            for y in 0..a.dim {
                let v = td.eval(&a.mul(&a.unit_vec(y), &td.dual[x]));
                let want = if x == y { Scalar::one(&a.field) } else { Scalar::zero(&a.field) };
                assert_eq!(v, want, "{name}: t({y} * {x}*)");
            }
        }
    }
}

#[test]
fn trace_is_supported_on_nakayama_corners() {
    for (name, a, _) in all_examples() {
        let Ok(nak) = nakayama(&a) else { continue };
        let td = trace_dual(&a, &nak).unwrap();
        for u in 0..a.dim {
            if !td.t[u].is_zero() {
                assert_eq!(nak.nu[a.lv(u)], a.rv(u), "{name}: t nonzero on {}", a.labels[u]);
            }
        }
    }
}

#[test]
fn order_four_example_has_full_cartan_matrix() {
    let (a, _) = section7_example(4).unwrap();
    assert_eq!(a.cartan(), vec![vec![1, 1], vec![1, 1]]);
    assert_eq!(a.dim, 4);
}

#[test]
fn order_four_example_needs_fourth_roots() {
    assert_eq!(section7_example(6).unwrap_err(), Error::NeedsLargerConductor);
}

#[test]
fn instances_keep_trace_data_when_self_injective() {
    assert!(instance(cyclic_example(3)).trace.is_some());
    assert!(instance(hereditary_a2()).trace.is_none());
}

#[test]
fn adjoining_a_point_adds_a_fixed_simple_block() {
    for (name, a, act) in all_examples() {
        let (b, bact, embed) = gsym_core::algebra::adjoin_point(&a, &act).unwrap();
        assert_eq!(b.dim, a.dim + 1, "{name}");
        assert_eq!(b.nblocks, a.nblocks + 1, "{name}");
        assert_eq!(b.has_simple_block(), Some(b.block_of[a.nverts]), "{name}");
        for u in 0..a.dim {
            for v in 0..a.dim {
                let lifted: Vec<_> = a.mult[u][v].iter().map(|(k, c)| (embed[*k], c.clone())).collect();
                assert_eq!(b.mult[embed[u]][embed[v]], lifted, "{name}");
            }
        }
        let pt = b.unit_vec(b.idem[a.nverts]);
        for g in bact.group.elements() {
            assert_eq!(bact.apply(g, &pt), pt, "{name}");
            for u in 0..a.dim {
                let img: Vec<_> = act.apply(g, &a.unit_vec(u)).iter().map(|(k, c)| (embed[*k], c.clone())).collect();
                assert_eq!(bact.apply(g, &b.unit_vec(embed[u])), img, "{name}");
            }
        }
    }
}
