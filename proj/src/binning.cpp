#include "secdof/binning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "secdof/rng.hpp"

namespace secdof {

DiscreteChannel DiscreteChannel::binary_symmetric(double flip) {
  DiscreteChannel ch;
  ch.transition.resize(2, 2);
  ch.transition << 1.0 - flip, flip, flip, 1.0 - flip;
  return ch;
}

DiscreteChannel DiscreteChannel::noiseless(int alphabet) {
  DiscreteChannel ch;
  ch.transition = Eigen::MatrixXd::Identity(alphabet, alphabet);
  return ch;
}

DiscreteChannel DiscreteChannel::uniform_output(int inputs, int outputs) {
  DiscreteChannel ch;
  ch.transition =
      Eigen::MatrixXd::Constant(inputs, outputs, 1.0 / outputs);
  return ch;
}

void check_channel(const DiscreteChannel& ch) {
  if (ch.transition.rows() < 1 || ch.transition.cols() < 1)
    throw Error(Errc::ParseError, "empty transition matrix");
  if (ch.transition.minCoeff() < 0.0)
    throw Error(Errc::ParseError, "negative transition probability");
  for (int r = 0; r < ch.inputs(); ++r)
    if (std::abs(ch.transition.row(r).sum() - 1.0) > 1e-12)
      throw Error(Errc::ParseError, "transition rows must sum to 1");
}

namespace {

// 2^(n * rate) when n * rate is an integer; NonIntegerBinStructure else.
int pow2_rate(int n, double rate, const char* what) {
  const double bits = n * rate;
  const double rounded = std::round(bits);
  if (std::abs(bits - rounded) > 1e-9 || rounded < 0.0) {
    std::ostringstream msg;
    msg << what << ": n*rate = " << bits << " is not a nonnegative integer";
    throw Error(Errc::NonIntegerBinStructure, msg.str());
  }
  if (rounded > 24)
    throw Error(Errc::TooLargeToEnumerate, "codebook exceeds 2^24 codewords");
  return 1 << static_cast<int>(rounded);
}

void check_distribution(const std::vector<double>& dist) {
  if (dist.size() < 2)
    throw Error(Errc::ParseError, "input alphabet needs >= 2 symbols");
  double sum = 0;
  for (double p : dist) {
    if (p < 0) throw Error(Errc::ParseError, "negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw Error(Errc::ParseError, "input distribution must sum to 1");
}

std::uint8_t draw_symbol(std::mt19937_64& rng,
                         const std::vector<double>& dist) {
  const double u = uniform01(rng);
  double acc = 0;
  for (std::size_t s = 0; s + 1 < dist.size(); ++s) {
    acc += dist[s];
    if (u < acc) return static_cast<std::uint8_t>(s);
  }
  return static_cast<std::uint8_t>(dist.size() - 1);
}

}  // namespace

WiretapCode build_code(int block_length, double total_rate,
                       double secret_rate,
                       const std::vector<double>& input_dist,
                       std::uint64_t seed) {
  if (block_length < 1)
    throw Error(Errc::NonIntegerBinStructure, "block length must be >= 1");
  if (secret_rate < 0 || secret_rate > total_rate)
    throw Error(Errc::NonIntegerBinStructure,
                "need 0 <= R_s <= R_t for a bin structure");
  check_distribution(input_dist);
  const int bins = pow2_rate(block_length, secret_rate, "secret rate");
  const int per_bin =
      pow2_rate(block_length, total_rate - secret_rate, "randomness rate");

  WiretapCode code;
  code.block_length = block_length;
  code.total_rate = total_rate;
  code.secret_rate = secret_rate;
  code.alphabet = static_cast<int>(input_dist.size());

  auto rng = stream_rng(seed, 0);
  const int total = bins * per_bin;
  std::vector<std::vector<std::uint8_t>> words(total);
  for (auto& word : words) {
    word.resize(block_length);
    for (int k = 0; k < block_length; ++k)
      word[k] = draw_symbol(rng, input_dist);
  }
  // uniform random partition into bins: Fisher-Yates, then chunk
  std::vector<int> order(total);
  for (int i = 0; i < total; ++i) order[i] = i;
  for (int i = total - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(rng, i + 1));
    std::swap(order[i], order[j]);
  }
  code.bins.assign(bins, {});
  for (int w = 0; w < bins; ++w) {
    code.bins[w].reserve(per_bin);
    for (int v = 0; v < per_bin; ++v)
      code.bins[w].push_back(std::move(words[order[w * per_bin + v]]));
  }
  return code;
}

std::vector<std::uint8_t> encode(const WiretapCode& code, int bin,
                                 std::uint64_t seed) {
  if (bin < 0 || bin >= code.bin_count()) {
    std::ostringstream msg;
    msg << "bin " << bin << " out of range [0, " << code.bin_count() << ")";
    throw Error(Errc::IndexOutOfRange, msg.str());
  }
  auto rng = stream_rng(seed, 1);
  const auto v = uniform_below(rng, code.bin_size());
  return code.bins[bin][static_cast<std::size_t>(v)];
}

DecodeResult decode(const WiretapCode& code,
                    const std::vector<std::uint8_t>& received,
                    const DiscreteChannel& channel) {
  check_channel(channel);
  if (static_cast<int>(received.size()) != code.block_length)
    throw Error(Errc::IndexOutOfRange,
                "received word length differs from the block length");
  if (channel.inputs() < code.alphabet)
    throw Error(Errc::IndexOutOfRange,
                "channel input alphabet smaller than the code alphabet");
  for (auto y : received)
    if (y >= channel.outputs())
      throw Error(Errc::IndexOutOfRange, "received symbol out of alphabet");

  DecodeResult best;
  double best_score = -std::numeric_limits<double>::infinity();
  bool first = true;
  for (int w = 0; w < code.bin_count(); ++w) {
    for (int v = 0; v < code.bin_size(); ++v) {
      const auto& word = code.bins[w][v];
      double score = 0;
      for (int k = 0; k < code.block_length; ++k) {
        const double p = channel.transition(word[k], received[k]);
        score += p > 0 ? std::log2(p)
                       : -std::numeric_limits<double>::infinity();
      }
      if (first || score > best_score) {
        best = {w, v};
        best_score = score;
        first = false;
      }
    }
  }
  return best;
}

Equivocation equivocation(const WiretapCode& code,
                          const DiscreteChannel& eve) {
  check_channel(eve);
  if (eve.inputs() < code.alphabet)
    throw Error(Errc::IndexOutOfRange,
                "channel input alphabet smaller than the code alphabet");
  const int n = code.block_length;
  const int outputs = eve.outputs();
  const double total_words = std::pow(static_cast<double>(outputs), n);
  const double total_codewords =
      static_cast<double>(code.bin_count()) * code.bin_size();
  if (total_codewords * total_words > 1e7) {
    std::ostringstream msg;
    msg << "enumeration of " << total_codewords * total_words
        << " codeword-output pairs exceeds the 1e7 cap";
    throw Error(Errc::TooLargeToEnumerate, msg.str());
  }

  const double p_codeword = 1.0 / total_codewords;
  std::vector<std::uint8_t> z(n, 0);
  std::vector<double> joint(code.bin_count());
  Equivocation out;
  out.message_bits = std::log2(static_cast<double>(code.bin_count()));
  for (;;) {
    double pz = 0;
    for (int w = 0; w < code.bin_count(); ++w) {
      double acc = 0;
      for (int v = 0; v < code.bin_size(); ++v) {
        const auto& word = code.bins[w][v];
        double likelihood = 1.0;
        for (int k = 0; k < n; ++k)
          likelihood *= eve.transition(word[k], z[k]);
        acc += likelihood;
      }
      joint[w] = acc * p_codeword;
      pz += joint[w];
    }
    if (pz > 0) {
      for (int w = 0; w < code.bin_count(); ++w)
        if (joint[w] > 0)
          out.conditional_bits -= joint[w] * std::log2(joint[w] / pz);
    }
    // odometer over output words
    int k = n - 1;
    while (k >= 0 && ++z[k] == outputs) z[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

double mutual_information(const DiscreteChannel& ch,
                          const std::vector<double>& input_dist) {
  check_channel(ch);
  check_distribution(input_dist);
  if (static_cast<int>(input_dist.size()) != ch.inputs())
    throw Error(Errc::IndexOutOfRange,
                "input distribution size differs from the channel alphabet");
  Eigen::VectorXd px(ch.inputs());
  for (int x = 0; x < ch.inputs(); ++x) px(x) = input_dist[x];
  const Eigen::VectorXd py = ch.transition.transpose() * px;
  double info = 0;
  for (int x = 0; x < ch.inputs(); ++x)
    for (int y = 0; y < ch.outputs(); ++y) {
      const double pxy = px(x) * ch.transition(x, y);
      if (pxy > 0) info += pxy * std::log2(ch.transition(x, y) / py(y));
    }
  return info;
}

RateDesign design_rates(const DiscreteChannel& main, const DiscreteChannel& eve,
                        const std::vector<double>& input_dist,
                        int block_length, double epsilon) {
  const double i_main = mutual_information(main, input_dist);
  const double i_eve = mutual_information(eve, input_dist);
  RateDesign design;
  const double n = block_length;
  design.total_rate =
      std::max(0.0, std::floor(n * (i_main - epsilon)) / n);
  design.secret_rate = std::clamp(
      std::floor(n * (i_main - i_eve - epsilon)) / n, 0.0, design.total_rate);
  return design;
}

}  // namespace secdof
