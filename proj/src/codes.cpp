#include "cliquegap/codes.hpp"

namespace cg {

PltdcCode hadamard_pltdc(const PrimeField& field, std::size_t k) {
    const HadamardCode code(field, k);
    PltdcCode out{
        "hadamard", field, k, code.n, 1, 3, u128(code.n) * code.n, code.n, Rational(1, 2), {}, {}, {}};
    out.encode = [code](const MessageTable& messages) { return had_encode(code, messages); };
    out.tester = had_tester(code);
    out.decoder_for = [code](const DecodeTarget& t) { return had_decoder(code, t); };
    return out;
}

PltdcCode derivative_pltdc(const DcParams& params) {
    PltdcCode out{"derivative",
                  params.field,
                  params.message_len,
                  params.block_len,
                  params.symbol_width(),
                  6u * params.d + 7,
                  1,
                  1,
                  Rational(1, 2),
                  {},
                  {},
                  {}};
    out.tester = dc_tester(params);
    out.tester_randomness = out.tester.randomness_size;
    out.decoder_randomness =
        u128(params.block_len) * (params.field.modulus() - 1) * (params.field.modulus() - 2);
    out.encode = [params](const MessageTable& messages) { return dc_encode(params, messages); };
    out.decoder_for = [params](const DecodeTarget& t) { return dc_decoder(params, t); };
    return out;
}

PltdcCode line_pltdc(const LcParams& params) {
    PltdcCode out{"line",
                  params.base.field,
                  params.base.message_len,
                  params.domain.size(),
                  params.symbol_width(),
                  11,
                  1,
                  1,
                  Rational(2, 13),
                  {},
                  {},
                  {}};
    out.tester = lc_tester(params);
    out.tester_randomness = out.tester.randomness_size;
    out.decoder_randomness = lc_decoder(params, DecodeTarget::chi(0)).randomness_size;
    out.encode = [params](const MessageTable& messages) { return lc_encode(params, messages); };
    out.decoder_for = [params](const DecodeTarget& t) { return lc_decoder(params, t); };
    return out;
}

} // namespace cg
