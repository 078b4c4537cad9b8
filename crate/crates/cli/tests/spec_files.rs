use gsym::spec::{
    cyclic_spec, emit_spec, order_four_spec, parse_spec, Atom, GeneratorSpec, InstanceSpec, Monomial, SymScalar, Term,
};
use gsym::{load, LoadError};
use gsym_core::algebra::{Algebra, GroupAction};
use gsym_core::twocat::{cyclic_example, hereditary_a2, section7_example};
use gsym_core::{make_field, root_of_unity, Error, Rat, Scalar};
use proptest::prelude::*;

const ORDER_FOUR: &str = "\
# two vertices swapped by an automorphism of order four
[field]
m = 4

[quiver]
vertices = 2
arrow a: 1 -> 2
arrow b: 2 -> 1

[relations]
a*b
b*a

[group]
generator phi order 4
maps e1 -> e2
maps e2 -> e1
maps a -> -1 * b
maps b -> a
";

fn same(x: &(Algebra, GroupAction), y: &(Algebra, GroupAction)) {
    assert_eq!(x.0.dim, y.0.dim);
    assert_eq!(x.0.mult, y.0.mult);
    assert_eq!(x.0.idem, y.0.idem);
    assert_eq!(x.1.group.orders, y.1.group.orders);
    assert_eq!(x.1.mats, y.1.mats);
}

#[test]
fn order_four_file_matches_the_builtin() {
    let spec = parse_spec(ORDER_FOUR).unwrap();
    assert_eq!(spec, order_four_spec());
    same(&spec.build().unwrap(), &section7_example(4).unwrap());
}

#[test]
fn builtin_specs_round_trip_and_build_the_builtins() {
    for n in 2..=4 {
        let spec = cyclic_spec(n);
        let text = emit_spec(&spec);
        assert_eq!(parse_spec(&text).unwrap(), spec, "{text}");
        same(&spec.build().unwrap(), &cyclic_example(n).unwrap());
    }
    let text = emit_spec(&order_four_spec());
    assert_eq!(parse_spec(&text).unwrap(), order_four_spec());
}

#[test]
fn cyclic_two_file_has_the_expected_shape() {
    let spec = parse_spec(&emit_spec(&cyclic_spec(2))).unwrap();
    assert_eq!((spec.vertices, spec.arrows.len(), spec.truncate), (2, 2, Some(2)));
    assert_eq!(spec.generators.len(), 1);
    assert_eq!(spec.generators[0].order, 2);
}

#[test]
fn conductor_defaults_to_the_group_exponent() {
    let text = ORDER_FOUR.replace("[field]\nm = 4\n", "");
    let spec = parse_spec(&text).unwrap();
    assert_eq!(spec.m, None);
    assert_eq!(spec.conductor(), 4);
    same(&spec.build().unwrap(), &section7_example(4).unwrap());
    let plain = parse_spec("[quiver]\nvertices = 2\narrow a: 1 -> 2\n").unwrap();
    assert_eq!(plain.conductor(), 1);
    same(&plain.build().unwrap(), &hereditary_a2().unwrap());
}

#[test]
fn missing_quiver_is_reported_at_the_first_data_line() {
    let text = "# comment\n\n[relations]\n  a*b\n";
    let e = parse_spec(text).unwrap_err();
    assert_eq!((e.line, e.col), (4, 3));
    assert!(e.msg.contains("[quiver]"), "{e}");
    let e = parse_spec("# nothing here\n[field]\nm = 3\n").unwrap_err();
    assert!(e.msg.contains("[quiver]"), "{e}");
    let e = parse_spec("arrow a: 1 -> 2\n").unwrap_err();
    assert_eq!((e.line, e.col), (1, 1));
}

#[test]
fn syntax_errors_carry_positions() {
    let cases: &[(&str, usize, usize)] = &[
        ("[quiver]\nvertices = 2\narrow a: 1 -> 3\n", 3, 15),
        ("[quiver]\nvertices = 2\narrow a: 1 -> 2\n[relations]\na*c\n", 5, 3),
        ("[quiver]\nvertices = 1\n[relations]\nzeta(0)^1*e1\n", 4, 6),
        ("[quiver]\nvertices = 1\n[relations]\n2 $ e1\n", 4, 3),
        ("[quiver]\nvertices = 1\n[group]\nmaps e1 -> e1\n", 4, 6),
        ("[quiver]\nvertices = 1\n[colours]\n", 3, 1),
        ("[quiver]\nvertices = 2\narrow a: 1 -> 2\narrow a: 2 -> 1\n", 4, 8),
        ("[quiver]\nvertices = 1\n[relations]\n1/0*e1\n", 4, 3),
        ("[quiver]\nvertices = 2\n[relations]\ne3\n", 4, 1),
    ];
    for &(text, line, col) in cases {
        let e = parse_spec(text).unwrap_err();
        assert_eq!((e.line, e.col), (line, col), "{text:?}: {e}");
    }
}

#[test]
fn scalar_literals_evaluate_in_the_field() {
    let spec =
        parse_spec("[field]\nm = 12\n[quiver]\nvertices = 1\n[relations]\n(1/2 - zeta(4)^3)*zeta(3)^-1*e1\n").unwrap();
    let f = make_field(12).unwrap();
    let got = spec.relations[0][0].coeff.eval(&f).unwrap();
    let want = Scalar::frac(&f, 1, 2).sub(&root_of_unity(&f, 4, 3).unwrap()).mul(&root_of_unity(&f, 3, -1).unwrap());
    assert_eq!(got, want);
}

#[test]
fn semantic_errors_come_from_the_build() {
    let bad_root = ORDER_FOUR.replace("maps b -> a", "maps b -> zeta(3)^1*a");
    assert!(matches!(load(&bad_root), Err(LoadError::Build(Error::RootNotInField { k: 3, m: 4 }))));
    let not_auto = ORDER_FOUR.replace("maps b -> a", "maps b -> 0*a");
    assert!(matches!(load(&not_auto), Err(LoadError::Build(Error::NotAutomorphism(_)))));
}

fn monomial() -> impl Strategy<Value = Monomial> {
    let root = (prop::sample::select(vec![1u32, 2, 3, 4, 6]), -3i64..6);
    ((-5i64..6), (1i64..5), prop::collection::vec(root, 0..3))
        .prop_map(|(n, d, roots)| Monomial { coeff: Rat::new(n, d), roots })
}

fn combo(arrows: usize, vertices: usize) -> impl Strategy<Value = Vec<Term>> {
    let atom = prop_oneof![
        (0..vertices).prop_map(Atom::Idem),
        (0..arrows.max(1)).prop_map(move |k| if arrows == 0 { Atom::Idem(0) } else { Atom::Arrow(format!("x{k}")) }),
    ];
    let term = (prop::collection::vec(monomial(), 1..3), prop::collection::vec(atom, 0..3))
        .prop_map(|(m, word)| Term { coeff: SymScalar(m), word });
    prop::collection::vec(term, 1..4)
}

fn instance_spec() -> impl Strategy<Value = InstanceSpec> {
    (1usize..4, 0usize..4).prop_flat_map(|(v, na)| {
        let arrows = prop::collection::vec((0..v, 0..v), na);
        let gens = prop::collection::vec(
            (1u32..5, prop::collection::vec(combo(na, v), 0..3)).prop_map(move |(order, imgs)| GeneratorSpec {
                name: "g".into(),
                order,
                maps: imgs.into_iter().enumerate().map(|(k, c)| (Atom::Idem(k % v), c)).collect(),
            }),
            0..3,
        );
        (
            prop::option::of(1u32..13),
            arrows,
            prop::collection::vec(combo(na, v), 0..3),
            prop::option::of(0usize..4),
            prop::option::of(1usize..20),
            gens,
        )
            .prop_map(move |(m, arrows, relations, truncate, max_len, mut generators)| {
                for (i, g) in generators.iter_mut().enumerate() {
                    g.name = format!("g{i}");
                    g.maps.dedup_by(|x, y| x.0 == y.0);
                    let mut seen = Vec::new();
                    g.maps.retain(|m| {
                        if seen.contains(&m.0) {
                            false
                        } else {
                            seen.push(m.0.clone());
                            true
                        }
                    });
                }
                InstanceSpec {
                    m,
                    vertices: v,
                    arrows: arrows.into_iter().enumerate().map(|(k, (s, t))| (format!("x{k}"), s, t)).collect(),
                    relations,
                    truncate,
                    max_len,
                    generators,
                }
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn emitted_text_parses_back(spec in instance_spec()) {
        let text = emit_spec(&spec);
        prop_assert_eq!(parse_spec(&text).map_err(|e| format!("{e}\n{text}")), Ok(spec));
    }
}
