use davenport_core::cayley::{from_cayley_file, parse_cayley, render_cayley};
use davenport_core::construct::{
    alternating, cyclic, dicyclic, dihedral, direct_product, from_permutations, heisenberg,
    modular_maximal_cyclic, parse_cycles, semidihedral, semidirect_product, symmetric,
    SemidirectAction,
};
use davenport_core::error::Error;
use davenport_core::morphism::is_isomorphic;
use davenport_core::registry::{
    lookup, order48_fixture, order80_fixture, order81_fixture, registry, ENTRIES,
};
use davenport_core::{build_group, fingerprint, parse_group_spec, validate_cayley, FiniteGroup};

fn named(g: &FiniteGroup, name: &str) -> usize {
    g.element_by_name(name)
        .unwrap_or_else(|| panic!("no generator {name} in {}", g.name()))
}

fn involutions(g: &FiniteGroup) -> usize {
    (0..g.order()).filter(|&x| g.element_order(x) == 2).count()
}

#[test]
fn cyclic_and_direct_products() {
    assert_eq!(cyclic(1).order(), 1);
    let k = direct_product(&cyclic(2), &cyclic(2));
    assert_eq!((k.order(), k.exponent()), (4, 2));
    let g = direct_product(&cyclic(3), &heisenberg(3).unwrap());
    assert_eq!((g.order(), g.exponent()), (81, 3));
    assert!(!g.is_abelian());
    let fixture = order81_fixture().unwrap();
    assert_eq!(fingerprint(&g), fingerprint(&fixture));
}

#[test]
fn direct_product_generator_names_stay_unique() {
    let g = direct_product(&cyclic(2), &cyclic(2));
    let names: Vec<&str> = g.gen_names().iter().map(|(s, _)| s.as_str()).collect();
    assert_eq!(names, vec!["a", "a2"]);
    let (a, a2) = (named(&g, "a"), named(&g, "a2"));
    assert_ne!(a, a2);
    assert_eq!(
        g.subgroup_generated(&davenport_core::ElementSet::from_elements(4, [a, a2]))
            .len(),
        4
    );
}

#[test]
fn trivial_action_gives_direct_product() {
    for (n, h) in [
        (cyclic(4), cyclic(3)),
        (dihedral(6).unwrap(), cyclic(2)),
        (direct_product(&cyclic(2), &cyclic(2)), dicyclic(8).unwrap()),
    ] {
        let direct = direct_product(&n, &h);
        let semi = semidirect_product(&SemidirectAction::trivial(n, h)).unwrap();
        assert!(is_isomorphic(&semi, &direct).unwrap());
    }
}

#[test]
fn order48_semidirect_from_generator_images() {
    let normal = direct_product(&cyclic(4), &cyclic(4).renamed(&[("a", "b")]).unwrap());
    let acting = cyclic(3).renamed(&[("a", "c")]).unwrap();
    let (a, b) = (named(&normal, "a"), named(&normal, "b"));
    let img_a = normal.mul(a, normal.inv(b));
    let img_b = normal.mul(normal.inv(a), normal.mul(b, b));
    let act =
        SemidirectAction::from_generator_images(normal, acting, &[vec![img_a, img_b]]).unwrap();
    let g = semidirect_product(&act).unwrap();
    assert_eq!(g.order(), 48);
    assert!(!g.is_abelian());
    let (a, b, c) = (named(&g, "a"), named(&g, "b"), named(&g, "c"));
    assert_eq!(g.conj(c, a), g.mul(a, g.inv(b)));
    assert_eq!(g.conj(c, b), g.mul(g.inv(a), g.mul(b, b)));
    assert!(is_isomorphic(&g, &order48_fixture().unwrap()).unwrap());
}

#[test]
fn order80_fixture_relations() {
    let g = order80_fixture().unwrap();
    assert_eq!(g.order(), 80);
    assert!(!g.is_abelian());
    let [a, b, c, d, e] = ["a", "b", "c", "d", "e"].map(|s| named(&g, s));
    assert_eq!(g.conj(e, a), d);
    assert_eq!(g.conj(e, b), g.mul(a, d));
    assert_eq!(g.conj(e, c), g.mul(b, d));
    assert_eq!(g.conj(e, d), g.mul(c, d));
    assert_eq!(g.element_order(e), 5);
}

#[test]
fn bad_actions_are_rejected() {
    let n = cyclic(3);
    let h = cyclic(2);
    // x -> x + 1 does not fix the identity
    let shift = SemidirectAction {
        normal: n.clone(),
        acting: h.clone(),
        action: vec![vec![0, 1, 2], vec![1, 2, 0]],
    };
    assert!(matches!(
        semidirect_product(&shift),
        Err(Error::NotAutomorphism(1))
    ));
    // inversion assigned to the identity of the acting group
    let swapped = SemidirectAction {
        normal: n,
        acting: h,
        action: vec![vec![0, 2, 1], vec![0, 1, 2]],
    };
    assert!(matches!(
        semidirect_product(&swapped),
        Err(Error::NotHomomorphism(..))
    ));
}

#[test]
fn named_families_against_registry() {
    assert_eq!(
        fingerprint(&dihedral(6).unwrap()),
        fingerprint(&registry(6, 1).unwrap())
    );
    assert_eq!(
        fingerprint(&dicyclic(12).unwrap()),
        fingerprint(&registry(12, 1).unwrap())
    );
    assert_eq!(
        fingerprint(&dicyclic(16).unwrap()),
        fingerprint(&registry(16, 9).unwrap())
    );
    assert_eq!(
        fingerprint(&semidihedral(16).unwrap()),
        fingerprint(&registry(16, 8).unwrap())
    );
    assert_eq!(
        fingerprint(&modular_maximal_cyclic(16).unwrap()),
        fingerprint(&registry(16, 6).unwrap())
    );
    let h27 = heisenberg(3).unwrap();
    assert_eq!(
        (h27.order(), h27.exponent(), h27.center().len()),
        (27, 3, 3)
    );
    assert!(!h27.is_abelian());
    assert!(is_isomorphic(&h27, &registry(27, 3).unwrap()).unwrap());
}

#[test]
fn heisenberg_relation() {
    let g = heisenberg(5).unwrap();
    let [a, b, c] = ["a", "b", "c"].map(|s| named(&g, s));
    assert_eq!(g.conj(b, a), g.mul(a, g.inv(c)));
    assert_eq!(g.mul(a, c), g.mul(c, a));
    assert_eq!(g.exponent(), 5);
    assert!(heisenberg(2).is_err());
    assert!(heisenberg(9).is_err());
}

#[test]
fn dicyclic_has_a_unique_involution() {
    for order in [8, 12, 16, 20, 24, 28, 32] {
        assert_eq!(involutions(&dicyclic(order).unwrap()), 1, "Q{order}");
    }
}

#[test]
fn odd_dihedral_commutator_subgroup() {
    for n in [3, 5, 7, 9, 11] {
        assert_eq!(dihedral(2 * n).unwrap().commutator_subgroup().len(), n);
    }
}

#[test]
fn degenerate_parameters() {
    assert!(is_isomorphic(&dihedral(2).unwrap(), &cyclic(2)).unwrap());
    assert!(is_isomorphic(&dicyclic(4).unwrap(), &cyclic(4)).unwrap());
    assert!(dihedral(7).is_err());
    assert!(dicyclic(6).is_err());
    assert!(semidihedral(8).is_err());
    assert!(modular_maximal_cyclic(24).is_err());
}

#[test]
fn permutation_groups() {
    let s3 = from_permutations(
        3,
        &[
            parse_cycles(3, "(1 2 3)").unwrap(),
            parse_cycles(3, "(1 2)").unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(s3.order(), 6);
    assert!(is_isomorphic(&s3, &dihedral(6).unwrap()).unwrap());

    let a4 = from_permutations(
        4,
        &[
            parse_cycles(4, "(1 2 3)").unwrap(),
            parse_cycles(4, "(1 2)(3 4)").unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(a4.order(), 12);
    assert_eq!(fingerprint(&a4), fingerprint(&registry(12, 3).unwrap()));
    assert_eq!(fingerprint(&alternating(4).unwrap()), fingerprint(&a4));

    assert_eq!(from_permutations(1, &[]).unwrap().order(), 1);
    assert_eq!(symmetric(5).unwrap().order(), 120);
    assert!(parse_cycles(3, "(1 4)").is_err());
    assert!(parse_cycles(3, "(1 1)").is_err());
}

#[test]
fn constructor_outputs_pass_full_validation() {
    let groups = vec![
        cyclic(9),
        dihedral(14).unwrap(),
        dicyclic(20).unwrap(),
        semidihedral(32).unwrap(),
        modular_maximal_cyclic(32).unwrap(),
        heisenberg(3).unwrap(),
        symmetric(4).unwrap(),
        alternating(5).unwrap(),
        order48_fixture().unwrap(),
        order80_fixture().unwrap(),
    ];
    for g in groups {
        let h = validate_cayley(&g.to_rows()).unwrap_or_else(|e| panic!("{}: {e}", g.name()));
        assert_eq!(fingerprint(&h), fingerprint(&g));
    }
}

#[test]
fn spec_strings() {
    let g = build_group("C2xC2xC4").unwrap();
    assert_eq!(g.order(), 16);
    assert!(g.is_abelian());
    assert!(is_isomorphic(&build_group("D8").unwrap(), &dihedral(8).unwrap()).unwrap());
    let h = build_group("gap:27.3").unwrap();
    assert!(is_isomorphic(&h, &heisenberg(3).unwrap()).unwrap());
    assert_eq!(build_group("SD16").unwrap().order(), 16);
    assert_eq!(build_group("Q12xC1").unwrap().order(), 12);
    assert!(matches!(
        build_group("gap:5.9"),
        Err(Error::UnknownRegistryId(5, 9))
    ));
    assert!(build_group("H8").is_err());
}

#[test]
fn spec_parse_errors_carry_positions() {
    for bad in ["", "X3", "C", "C3x", "gap:4", "D8 x C2", "C3xxC2"] {
        assert!(parse_group_spec(bad).is_err(), "{bad:?} should not parse");
    }
    let err = parse_group_spec("C3xZ2").unwrap_err();
    assert_eq!(err.pos, 3);
}

#[test]
fn spec_render_round_trip() {
    for text in [
        "C2", "D8", "Q12", "SD16", "M32", "H27", "A4", "S3", "gap:16.9", "C2xC2xC4", "D6xQ8",
    ] {
        let spec = parse_group_spec(text).unwrap();
        assert_eq!(spec.render().as_deref(), Some(text));
    }
}

#[test]
fn cayley_text_and_file() {
    let text = "cayley 1\n# Z/4\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
    let g = parse_cayley(text).unwrap();
    assert!(is_isomorphic(&g, &cyclic(4)).unwrap());

    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("d8.cayley");
    std::fs::write(&path, render_cayley(&dihedral(8).unwrap())).unwrap();
    let from_file = from_cayley_file(&path).unwrap();
    assert!(is_isomorphic(&from_file, &dihedral(8).unwrap()).unwrap());
    let spec = format!("cayley:{}", path.display());
    assert_eq!(build_group(&spec).unwrap().order(), 8);
}

#[test]
fn cayley_rejects_bad_files() {
    assert!(matches!(
        parse_cayley("cayley 2\n1\n0\n"),
        Err(Error::Format { .. })
    ));
    assert!(matches!(
        parse_cayley("cayley 1\n2\n0 1\n"),
        Err(Error::Format { .. })
    ));
    assert!(matches!(
        parse_cayley("cayley 1\n2\n0 1\n1 1\n"),
        Err(Error::Validation(_))
    ));
}

#[test]
fn registry_examples() {
    let q16 = registry(16, 9).unwrap();
    assert_eq!(q16.order(), 16);
    assert_eq!(involutions(&q16), 1);
    assert!(matches!(
        registry(32, 999),
        Err(Error::UnknownRegistryId(32, 999))
    ));
}

#[test]
fn registry_fingerprints_hold() {
    for entry in ENTRIES.iter().filter(|e| e.id.0 <= 64) {
        let (m, k) = entry.id;
        let g = registry(m, k).unwrap_or_else(|e| panic!("({m},{k}): {e}"));
        assert_eq!(g.order(), m);
        assert_eq!(fingerprint(&g).to_string(), entry.fingerprint);
        assert!(lookup(m, k).is_some());
    }
}

#[test]
fn registry_matches_named_constructions() {
    let pairs: Vec<((usize, usize), FiniteGroup)> = vec![
        ((8, 3), dihedral(8).unwrap()),
        ((8, 4), dicyclic(8).unwrap()),
        ((10, 1), dihedral(10).unwrap()),
        ((12, 4), dihedral(12).unwrap()),
        ((14, 1), dihedral(14).unwrap()),
        ((16, 7), dihedral(16).unwrap()),
        ((16, 8), semidihedral(16).unwrap()),
    ];
    for ((m, k), g) in pairs {
        assert!(
            is_isomorphic(&registry(m, k).unwrap(), &g).unwrap(),
            "({m},{k})"
        );
    }
}
