//! Quotients, localizations, direct products and products of submodules.

mod localize;
mod product;
mod quotient;

pub use localize::{localize, Localization, MultiplicativeSet};
pub use product::{
    colon_product, direct_product, element_product, presentation_mismatch, submodule_product, DirectProduct,
};
pub use quotient::{quotient_module, Quotient};
