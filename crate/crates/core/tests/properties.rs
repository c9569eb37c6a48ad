mod common;

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use residua::algebra::{GaussRational, MultiPoly, Var};
use residua::cli::eval::{parse_darboux, parse_one_form};
use residua::cli::parser::parse;
use residua::dicritical::{is_dicritical, Verdict};
use residua::foliation::AffineFoliation1Form;
use residua::indices::{bb_from_factored_integral, bb_residue};
use residua::integral::{check_first_integral, one_form_from_factored};
use residua::local::{
    grothendieck_residue, grothendieck_residue_by_elimination, local_intersection_multiplicity_by_localization,
    local_intersection_multiplicity_seeded,
};

fn origin() -> [GaussRational; 2] {
    [GaussRational::zero(), GaussRational::zero()]
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pull-back of `A dx + B dy` under `(x, y) ↦ (a x + b y, c x + d y)`.
fn pull_back(form: &AffineFoliation1Form, [a, b, c, d]: [i64; 4]) -> AffineFoliation1Form {
    let lin = |p: i64, q: i64| &xy_term(p, 1, 0) + &xy_term(q, 0, 1);
    let subs = [(Var::X, lin(a, b)), (Var::Y, lin(c, d))];
    let (pa, pb) = (form.a().compose(&subs), form.b().compose(&subs));
    let k = |n: i64| GaussRational::from_int(n);
    let new_a = &pa.scale(&k(a)) + &pb.scale(&k(c));
    let new_b = &pa.scale(&k(b)) + &pb.scale(&k(d));
    AffineFoliation1Form::new(new_a, new_b).expect("nonzero pull-back")
}

const DICRITICAL_SAMPLES: [(&str, Verdict); 6] = [
    ("x*dy - y*dx", Verdict::Dicritical),
    ("x*dy - 3*y*dx", Verdict::Dicritical),
    ("x*dy - (2*y + x^2)*dx", Verdict::NonDicritical),
    ("x*dy + 2*y*dx", Verdict::NonDicritical),
    ("y*dx + x^2*dy", Verdict::NonDicritical),
    ("x^2*dx + y^2*(x*dy - y*dx)", Verdict::Dicritical),
];

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn factored_integrals_match_the_residue(seed in any::<u64>()) {
        let g = random_factored_integral(&mut rng(seed));
        let closed = bb_from_factored_integral(&g).unwrap();
        let w = one_form_from_factored(&g).unwrap();
        prop_assert_eq!(&closed, &bb_residue(&w, &origin()).unwrap());
        let v = closed.as_exact().unwrap().clone();
        prop_assert!(v.is_real() && !v.re.is_positive());
        prop_assert!(check_first_integral(&w, &g.to_darboux()).unwrap());
    }

    #[test]
    fn residue_is_linear_and_kills_the_ideal(seed in any::<u64>(), c in -6i64..=6) {
        let mut r = rng(seed);
        let (f, g) = random_isolated_pair(&mut r);
        let (h1, h2) = (random_terms(&mut r, 0, 4, 4), random_terms(&mut r, 0, 4, 4));
        let c = GaussRational::from_int(c);
        let lhs = grothendieck_residue(&(&h1 + &h2.scale(&c)), &f, &g).unwrap();
        let rhs = &grothendieck_residue(&h1, &f, &g).unwrap() + &(&c * &grothendieck_residue(&h2, &f, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
        let (a, b) = (random_terms(&mut r, 0, 3, 3), random_terms(&mut r, 0, 3, 3));
        let member = &(&a * &f) + &(&b * &g);
        prop_assert!(grothendieck_residue(&member, &f, &g).unwrap().is_zero());
    }

    #[test]
    fn residue_agrees_with_global_elimination(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g) = random_isolated_pair(&mut r);
        let h = random_terms(&mut r, 0, 5, 5);
        prop_assert_eq!(
            grothendieck_residue(&h, &f, &g).unwrap(),
            grothendieck_residue_by_elimination(&h, &f, &g).unwrap()
        );
    }

    #[test]
    fn intersection_number_is_seed_free(seed in any::<u64>(), other in any::<u64>()) {
        let (f, g) = random_isolated_pair(&mut rng(seed));
        let by_shear = local_intersection_multiplicity_seeded(&f, &g, &mut rng(other)).unwrap();
        prop_assert_eq!(by_shear, local_intersection_multiplicity_by_localization(&f, &g).unwrap());
    }

    #[test]
    fn verdicts_survive_linear_changes(k in 0usize..DICRITICAL_SAMPLES.len(), m in prop::array::uniform4(-3i64..=3)) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let (src, want) = DICRITICAL_SAMPLES[k];
        let moved = pull_back(&parse_one_form(src).unwrap(), m);
        prop_assert_eq!(is_dicritical(&moved, 12).unwrap().verdict, want, "{}", moved);
    }

    #[test]
    fn printed_expressions_reparse(seed in any::<u64>()) {
        let e = random_expr(&mut rng(seed), 5);
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn first_integrals_survive_reparametrization(c in 1i64..=9, k in -9i64..=9, p in 1u32..=3) {
        let w = parse_one_form("x^2*dx + y^2*(x*dy - y*dx)").unwrap();
        let h = "(y^3 - 3*x^2)/(3*x^3)";
        for src in [
            format!("{c}*{h} + {k}"),
            format!("({h})^{p}"),
            format!("1/({h})"),
        ] {
            prop_assert!(check_first_integral(&w, &parse_darboux(&src).unwrap()).unwrap(), "{}", src);
        }
        let factor = &xy_term(c, 0, 0) + &xy_term(k, 1, 0);
        let scaled = AffineFoliation1Form::new(w.a() * &factor, w.b() * &factor).unwrap();
        prop_assert!(check_first_integral(&scaled, &parse_darboux(h).unwrap()).unwrap());
        let perturbed = format!("{h} + x^{p}");
        prop_assert!(!check_first_integral(&w, &parse_darboux(&perturbed).unwrap()).unwrap());
    }
}

#[test]
fn pull_back_is_the_identity_for_the_identity() {
    let w = parse_one_form("x^2*dx + y^2*(x*dy - y*dx)").unwrap();
    assert!(pull_back(&w, [1, 0, 0, 1]).same_foliation(&w));
    let swapped = pull_back(&w, [0, 1, 1, 0]);
    let y2: MultiPoly = "y^2 - x^3".parse().unwrap();
    assert_eq!(swapped.b(), &y2);
}
