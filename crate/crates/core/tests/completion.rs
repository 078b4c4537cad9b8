mod common;

use common::instance;
use gsym_core::algebra::GroupAction;
use gsym_core::completion::*;
use gsym_core::group::dual_subgroup;
use gsym_core::twocat::*;
use gsym_core::xcat::XMorphism;

fn instances() -> Vec<(&'static str, Instance)> {
    vec![
        ("cyclic 2", instance(cyclic_example(2))),
        ("cyclic 3", instance(cyclic_example(3))),
        ("dual numbers", instance(dual_numbers(2))),
        ("dual numbers Z/4", instance(dual_numbers(4))),
        ("klein", instance(klein_example())),
        ("order-4 example", instance(section7_example(4))),
    ]
}

#[test]
fn character_idempotents_are_orthogonal_and_complete() {
    for (name, inst) in instances() {
        let s = &inst.s;
        let cat = catalogue(&inst).unwrap();
        for m in &cat.bases {
            let w = witnesses(s, m).unwrap();
            let chars = dual_subgroup(&s.act.group, &w.stab);
            let es: Vec<XMorphism> = chars.iter().map(|c| epsilon_idempotent(s, m, &w, c).unwrap()).collect();
            let sum = es.iter().fold(XMorphism::zero(s.g(), m.dim, m.dim), |acc, e| acc.add(e));
            assert_eq!(sum, XMorphism::identity(s.g(), m.dim, s.field()), "{name}");
            for (i, x) in es.iter().enumerate() {
                assert!(s.is_x_morphism(m, m, x));
                for (j, y) in es.iter().enumerate() {
                    let p = s.compose(x, y).unwrap();
                    if i == j {
                        assert_eq!(&p, x, "{name}: idempotent {i}");
                    } else {
                        assert!(p.is_zero(), "{name}: {i} and {j} not orthogonal");
                    }
                }
            }
        }
    }
}

#[test]
fn witnesses_compose_like_the_stabilizer() {
    for (name, inst) in instances() {
        let s = &inst.s;
        for m in &catalogue(&inst).unwrap().bases {
            let w = witnesses(s, m).unwrap();
            for &x in &w.stab {
                for &y in &w.stab {
                    let (wx, wy) = (w.w[x].as_ref().unwrap(), w.w[y].as_ref().unwrap());
                    assert_eq!(&wy.mul(wx), w.w[s.gmul(x, y)].as_ref().unwrap(), "{name}");
                }
            }
        }
    }
}

#[test]
fn semisimple_quotient_of_a_base_has_stabilizer_dimension() {
    for (name, inst) in instances() {
        let s = &inst.s;
        for m in &catalogue(&inst).unwrap().bases {
            let d = end_mod_rad_dim(s, &CompletedObject::plain(s, m.clone())).unwrap();
            assert_eq!(d, stabilizer(s, m).len(), "{name}");
        }
    }
}

#[test]
fn catalogue_entries_are_local_and_pairwise_distinct() {
    for (name, inst) in instances() {
        let s = &inst.s;
        let cat = catalogue(&inst).unwrap();
        for (i, x) in cat.entries.iter().enumerate() {
            assert_eq!(end_mod_rad_dim(s, &x.obj).unwrap(), 1, "{name}: {}", x.label);
            for (j, y) in cat.entries.iter().enumerate() {
                assert_eq!(iso_indecomposable(s, &x.obj, &y.obj), i == j, "{name}: {} vs {}", x.label, y.label);
            }
        }
    }
}

#[test]
fn rank_of_character_summand_is_dimension_over_stabilizer() {
    for (name, inst) in instances() {
        let s = &inst.s;
        let cat = catalogue(&inst).unwrap();
        for e in &cat.entries {
            let m = &cat.bases[e.base];
            let gm = stabilizer(s, m).len();
            assert_eq!(e.obj.rank(s), s.g() * m.dim / gm, "{name}: {}", e.label);
        }
    }
}

#[test]
fn catalogue_sizes_follow_orbit_and_stabilizer_counts() {
    let cases = [
        (instance(cyclic_example(2)), 4),
        (instance(cyclic_example(3)), 6),
        (instance(cyclic_example(4)), 8),
        (instance(dual_numbers(2)), 4),
        (instance(dual_numbers(4)), 8),
        (instance(klein_example()), 8),
        (instance(section7_example(4)), 8),
    ];
    for (inst, want) in cases {
        assert_eq!(catalogue(&inst).unwrap().len(), want);
    }
    let (a, _) = cyclic_example(3).unwrap();
    let act = GroupAction::trivial(&a);
    let inst = Instance::new(a, act);
    assert_eq!(catalogue(&inst).unwrap().len(), 1 + 9);
}

#[test]
fn simple_blocks_are_rejected() {
    let (a, _) = hereditary_a2().unwrap();
    let f = a.field.clone();
    let mut p = gsym_core::algebra::Presentation::new(&f, 1);
    p.max_len = 1;
    let k = gsym_core::algebra::build_algebra(&p).unwrap();
    let act = GroupAction::trivial(&k);
    assert!(matches!(catalogue(&Instance::new(k, act)), Err(gsym_core::Error::UnsupportedAlgebra(_))));
}

#[test]
fn pairing_rank_and_splitting_decompositions_agree() {
    for (name, inst) in instances().into_iter().take(3) {
        let s = &inst.s;
        let cat = catalogue(&inst).unwrap();
        let objs = cat.objects();
        let order: Vec<usize> = (0..objs.len()).collect();
        for x in &cat.entries {
            for y in &cat.entries {
                let (_, xy) = tensor_objects(s, &x.obj, &y.obj);
                let by_rank = decompose(s, &xy, &objs).unwrap();
                let (by_split, pairs) = decompose_by_splitting(s, &xy, &objs, &order).unwrap();
                assert_eq!(by_rank, by_split, "{name}: {} * {}", x.label, y.label);
                for (k, p) in pairs {
                    let back = s.compose(&p.retraction, &p.section).unwrap();
                    assert_eq!(back, objs[k].e);
                }
            }
        }
    }
}
