//! The standard fixture corpus: the small categories, presheaf corpora and
//! spaces that the verification suites sweep over.

use crate::classifier::{omega, OmegaTable};
use crate::fincat::{self, Base};
use crate::psh::{representable, Presheaf};
use crate::spaces::FinSpace;
use std::sync::Arc;

pub fn terminal_category() -> Base {
    Arc::new(fincat::terminal_category())
}

pub fn walking_arrow() -> Base {
    Arc::new(fincat::walking_arrow())
}

pub fn chain3() -> Base {
    Arc::new(fincat::chain(3))
}

pub fn z2() -> Base {
    Arc::new(fincat::cyclic_group(2))
}

pub fn z3() -> Base {
    Arc::new(fincat::cyclic_group(3))
}

pub fn square_poset() -> Base {
    Arc::new(fincat::square_poset())
}

pub fn discrete2() -> Base {
    Arc::new(fincat::discrete(&["i", "j"]))
}

pub fn discrete3() -> Base {
    Arc::new(fincat::discrete(&["i", "j", "k"]))
}

/// The six fixture categories used by the classifier suite.
pub fn classifier_fixtures() -> Vec<Base> {
    vec![
        terminal_category(),
        walking_arrow(),
        chain3(),
        z2(),
        z3(),
        square_poset(),
    ]
}

/// The standard presheaf corpus over a base: initial, terminal, all
/// representables, and Ω.
pub fn standard_corpus(base: &Base, om: &OmegaTable) -> Vec<Presheaf> {
    let mut corpus = vec![
        Presheaf::initial(base.clone()),
        Presheaf::terminal(base.clone()),
    ];
    for a in base.objects() {
        corpus.push(representable(base, a).psh);
    }
    corpus.push(om.omega.clone());
    corpus
}

/// Standard corpus with Ω computed on the fly.
pub fn standard_corpus_of(base: &Base) -> Vec<Presheaf> {
    let om = omega(base);
    standard_corpus(base, &om)
}

pub fn point_space() -> FinSpace {
    FinSpace::singleton()
}

pub fn sierpinski() -> FinSpace {
    FinSpace::sierpinski()
}

pub fn discrete2_space() -> FinSpace {
    FinSpace::discrete(2)
}

pub fn indiscrete2_space() -> FinSpace {
    FinSpace::indiscrete(2)
}

/// The fixture spaces for the locale and sobriety suites.
pub fn fixture_spaces() -> Vec<FinSpace> {
    vec![
        point_space(),
        sierpinski(),
        discrete2_space(),
        indiscrete2_space(),
    ]
}
