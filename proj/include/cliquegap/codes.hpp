#pragma once

#include <functional>
#include <string>

#include "cliquegap/derivative_code.hpp"
#include "cliquegap/hadamard.hpp"
#include "cliquegap/line_code.hpp"

namespace cg {

// A testable-and-decodable code packaged behind one surface: encoder, tester
// and the decoder family for every χ_i and ψ_{i,j}. This is what the
// reduction and the CLI consume; any of the three families plugs in.
struct PltdcCode {
    std::string name;
    PrimeField field;
    std::size_t message_len = 0;   // k
    std::uint64_t block_len = 0;   // k' (word positions)
    std::size_t symbol_width = 0;  // field elements per lane symbol
    std::size_t query_count = 0;   // q
    RIndex tester_randomness = 1;  // R_T
    RIndex decoder_randomness = 1; // R_D
    Rational eps_t_of_delta_num{1, 2}; // tester rejection slope: ε_T = 1 - slope·δ

    std::function<ParallelWord(const MessageTable&)> encode;
    TesterSpec tester;
    std::function<DecoderSpec(const DecodeTarget&)> decoder_for;

    // ε_T for a given δ.
    Rational eps_t(const Rational& delta) const {
        return monus(Rational(1, 1), eps_t_of_delta_num * delta);
    }
};

PltdcCode hadamard_pltdc(const PrimeField& field, std::size_t k);
PltdcCode derivative_pltdc(const DcParams& params);
PltdcCode line_pltdc(const LcParams& params);

} // namespace cg
