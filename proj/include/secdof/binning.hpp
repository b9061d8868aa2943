#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "secdof/errors.hpp"

namespace secdof {

// Memoryless channel over finite alphabets: transition(x, y) = p(y | x).
struct DiscreteChannel {
  Eigen::MatrixXd transition;

  int inputs() const { return static_cast<int>(transition.rows()); }
  int outputs() const { return static_cast<int>(transition.cols()); }

  static DiscreteChannel binary_symmetric(double flip);
  static DiscreteChannel noiseless(int alphabet);
  // output independent of the input: a total erasure of the codeword
  static DiscreteChannel uniform_output(int inputs, int outputs);
};

void check_channel(const DiscreteChannel& ch);

// Wyner code: 2^(n R_s) bins of 2^(n (R_t - R_s)) codewords each. The bin
// index carries the secret message; the index inside the bin is local
// randomness spent to saturate the eavesdropper.
struct WiretapCode {
  int block_length = 0;     // n
  double total_rate = 0;    // R_t, bits per symbol
  double secret_rate = 0;   // R_s, bits per symbol
  int alphabet = 2;
  std::vector<std::vector<std::vector<std::uint8_t>>> bins;  // [w][v][k]

  int bin_count() const { return static_cast<int>(bins.size()); }
  int bin_size() const {
    return bins.empty() ? 0 : static_cast<int>(bins[0].size());
  }
};

// Draws 2^(n R_t) codewords i.i.d. from input_dist and partitions them
// uniformly at random into bins. n R_s and n (R_t - R_s) must be integers;
// otherwise NonIntegerBinStructure.
WiretapCode build_code(int block_length, double total_rate,
                       double secret_rate,
                       const std::vector<double>& input_dist,
                       std::uint64_t seed);

// Uniformly picks a codeword from the bin. Deterministic for a fixed seed.
std::vector<std::uint8_t> encode(const WiretapCode& code, int bin,
                                 std::uint64_t seed);

struct DecodeResult {
  int bin = 0;
  int index = 0;
};

// Exhaustive maximum likelihood over the whole codebook; ties break to the
// lowest (bin, index) pair.
DecodeResult decode(const WiretapCode& code,
                    const std::vector<std::uint8_t>& received,
                    const DiscreteChannel& channel);

struct Equivocation {
  double conditional_bits = 0;  // H(W | Z)
  double message_bits = 0;      // H(W) = n R_s
  double ratio() const {
    return message_bits > 0 ? conditional_bits / message_bits : 1.0;
  }
};

// Exact H(W|Z) by enumerating the joint distribution of the secret message
// and the eavesdropper's output word. Enumeration is capped at 1e7
// codeword-output pairs (TooLargeToEnumerate past that).
Equivocation equivocation(const WiretapCode& code, const DiscreteChannel& eve);

// I(X;Y) in bits per symbol for the given input distribution.
double mutual_information(const DiscreteChannel& ch,
                          const std::vector<double>& input_dist);

// The wiretap design rule R_t = I(main) - eps, R_s = I(main) - I(eve) - eps,
// snapped down to the nearest rates with an integer bin structure at block
// length n.
struct RateDesign {
  double total_rate = 0;
  double secret_rate = 0;
};
RateDesign design_rates(const DiscreteChannel& main, const DiscreteChannel& eve,
                        const std::vector<double>& input_dist,
                        int block_length, double epsilon);

}  // namespace secdof
