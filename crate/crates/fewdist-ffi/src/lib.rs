//! C ABI for the fewdist library. Placeholder; filled in below.
