#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congruence/verify.hpp"

namespace congruence::claims {

void add_wilson(std::vector<Claim>& out);
void add_bernoulli(std::vector<Claim>& out);
void add_faulhaber(std::vector<Claim>& out);
void add_stirling(std::vector<Claim>& out);
void add_harmonic(std::vector<Claim>& out);
void add_giuga(std::vector<Claim>& out);
void add_qanalog(std::vector<Claim>& out);

inline std::string label(const char* name, std::int64_t v) { return std::string(name) + "=" + std::to_string(v); }

inline std::int64_t signed_of(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace congruence::claims
