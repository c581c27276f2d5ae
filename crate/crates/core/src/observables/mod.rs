//! Functions on Young diagrams: profile, transition measure, moments,
//! Boolean, twisted Boolean and free cumulants, and normalized characters.

mod characters;
mod cumulants;
mod profile;

pub use characters::{dimension, mn_character, mn_character_unnormalized, normalized_character};
pub use cumulants::{
    boolean_cumulants, free_cumulants, moment_cumulant_check, moments, observable,
    twisted_boolean_cumulants, ObservableKind, ObservableVector,
};
pub use profile::{profile_coordinates, transition_measure, Profile, TransitionMeasure};
