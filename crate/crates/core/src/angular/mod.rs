//! Angular-momentum quantities: characters, Wigner d-functions, 3j symbols,
//! Clebsch–Gordan coefficients and their Hahn-polynomial forms.

mod character;
mod identities;
mod koornwinder;
mod rotation;
mod threej;

pub use character::{
    character, character_closed, character_prefactor, character_ratio, character_series, gen_character,
    gen_character_celine_series, gen_character_jacobi, gen_character_series,
};
pub use identities::{
    khan_gamma_integral_lhs, rajeswari_first_params, rajeswari_first_rhs, rajeswari_second_params,
    rajeswari_second_rhs, HahnKhanParams,
};
pub use koornwinder::{
    cg_from_hahn_first, cg_from_hahn_second, cg_from_hahn_second_with, hahn_first_labels, hahn_second_labels,
    KoornwinderReading,
};
pub use rotation::{wigner_d, wigner_d_sum, wigner_d_with, DNormReading};
pub use threej::{
    clebsch, threej, threej_racah, threej_series, threej_weber_erdelyi, CgArgs, ThreeJArgs, ThreeJSeries,
};
