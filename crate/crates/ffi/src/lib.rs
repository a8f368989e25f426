#[no_mangle]
pub extern "C" fn biq_placeholder() -> u32 { biquasile::placeholder() }
