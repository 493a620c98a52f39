#pragma once

// JSON payloads compiled in from data/ at configure time.
namespace rbd::data {

extern const char* const e8_ledger;
extern const char* const e6_ledger;
extern const char* const factorization_e6_fishtails;
extern const char* const factorization_i6_fishtails;

}  // namespace rbd::data
