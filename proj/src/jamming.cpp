#include "secdof/jamming.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace secdof {

int StreamAllocation::total_message() const {
  return std::accumulate(message.begin(), message.end(), 0);
}

int StreamAllocation::total_jam() const {
  int total = 0;
  for (std::size_t i = 0; i < null_jam.size(); ++i)
    total += null_jam[i] + aligned_jam[i];
  return total;
}

ComplexMatrix nullspace_precoder(const ComplexMatrix& h, int streams,
                                 Tolerance tol) {
  const ComplexMatrix kernel = nullspace(h, tol);
  if (streams > kernel.cols()) {
    std::ostringstream msg;
    msg << "requested " << streams << " nullspace jamming streams but the "
        << h.rows() << "x" << h.cols() << " channel has nullity "
        << kernel.cols();
    throw Error(Errc::TooManyStreams, msg.str());
  }
  return kernel.leftCols(streams);
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Streams a group must absorb per member, extras to the lowest indices.
std::vector<int> split_streams(int total, int parts) {
  std::vector<int> out(parts, total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

int aligned_streams_needed(const SystemConfig& cfg, Regime regime) {
  switch (regime) {
    case Regime::BelowN:
      return cfg.max_eve_antennas;
    case Regime::Middle:
      return cfg.max_eve_antennas -
             cfg.num_tx * (cfg.tx_antennas - cfg.rx_antennas);
    case Regime::AboveN:
      return 0;
  }
  return 0;
}

}  // namespace

GroupPlan plan_groups(const SystemConfig& cfg) {
  const Regime regime = classify_regime(cfg);
  const int needed = aligned_streams_needed(cfg, regime);
  if (needed <= 0)
    throw Error(Errc::NotApplicable,
                "nullspace jamming covers every stream; nothing to align");
  const int m = cfg.tx_antennas;
  const int n = cfg.rx_antennas;
  std::ostringstream diag;
  for (int l = cfg.num_tx; l >= 2; --l) {
    const int dim_bound = l * (m - n) + m;
    const int occupied = ceil_div(needed, l);
    if (dim_bound < occupied) {
      diag << " L=" << l << ": intersection dimension bound L(M-N)+M="
           << dim_bound << " < " << occupied << " occupied dimensions;";
      continue;
    }
    if (l * dim_bound < needed) {
      diag << " L=" << l << ": group capacity L(L(M-N)+M)=" << l * dim_bound
           << " < " << needed << " streams;";
      continue;
    }
    GroupPlan plan;
    plan.group_size = l;
    plan.aligned_total = needed;
    plan.members.emplace_back(l);
    std::iota(plan.members[0].begin(), plan.members[0].end(), 0);
    plan.group_streams.push_back(needed);
    plan.member_streams.push_back(split_streams(needed, l));
    return plan;
  }
  diag << " L=1: no alignment partner";
  throw Error(Errc::Infeasible,
              "no feasible aligned-jamming group size:" + diag.str());
}

namespace {

// Deterministic full-rank row selection: greedily keep rows that grow the
// rank. Generic channels select the leading block on the first pass.
std::vector<Eigen::Index> independent_rows(const ComplexMatrix& h, int count,
                                           Tolerance tol) {
  std::vector<Eigen::Index> picked;
  ComplexMatrix acc(0, h.cols());
  for (Eigen::Index r = 0; r < h.rows() && static_cast<int>(picked.size()) <
                                               count;
       ++r) {
    ComplexMatrix trial(acc.rows() + 1, h.cols());
    trial << acc, h.row(r);
    if (rank(trial, tol) == trial.rows()) {
      acc = std::move(trial);
      picked.push_back(r);
    }
  }
  return picked;
}

// Solves h * v = target for a full-column-rank channel (the target must lie
// in the channel's range). Wide channels get the minimum-norm solution,
// which lives in the row space and is therefore orthogonal to ker(h).
ComplexMatrix preimage(const ComplexMatrix& h, const ComplexMatrix& target,
                       Tolerance tol) {
  ComplexMatrix v;
  if (h.cols() <= h.rows()) {
    const auto rows = independent_rows(h, static_cast<int>(h.cols()), tol);
    if (static_cast<int>(rows.size()) < h.cols())
      throw Error(Errc::Singular, "channel block is rank deficient");
    ComplexMatrix hs(h.cols(), h.cols());
    ComplexMatrix ts(h.cols(), target.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      hs.row(static_cast<Eigen::Index>(k)) = h.row(rows[k]);
      ts.row(static_cast<Eigen::Index>(k)) = target.row(rows[k]);
    }
    v = solve(hs, ts, tol);
  } else {
    const ComplexMatrix gram = (h * h.adjoint()).eval();
    v = h.adjoint() * solve(gram, target, tol);
  }
  if ((h * v - target).norm() > 1e-8 * std::max(1.0, target.norm()))
    throw Error(Errc::Singular,
                "alignment target does not lie in the channel range");
  return v;
}

}  // namespace

std::vector<ComplexMatrix> aligned_precoders(const ChannelSet& channels,
                                             GroupPlan& plan, Tolerance tol) {
  const int num_tx = static_cast<int>(channels.direct.size());
  const Eigen::Index m = channels.direct[0].cols();
  std::vector<ComplexMatrix> jam(num_tx, ComplexMatrix(m, 0));
  plan.intersection.assign(plan.members.size(), ComplexMatrix());
  for (std::size_t g = 0; g < plan.members.size(); ++g) {
    std::vector<ComplexMatrix> spans;
    spans.reserve(plan.members[g].size());
    for (int i : plan.members[g]) spans.push_back(orth(channels.direct[i], tol));
    ComplexMatrix common = intersect(spans, tol);
    const int occupied = plan.occupied(static_cast<int>(g));
    if (common.cols() < occupied)
      throw Error(Errc::Singular,
                  "receiver-span intersection is smaller than planned; "
                  "channels are degenerate");
    plan.intersection[g] = common;
    const ComplexMatrix target = common.leftCols(occupied);
    for (std::size_t k = 0; k < plan.members[g].size(); ++k) {
      const int i = plan.members[g][k];
      const int streams = plan.member_streams[g][k];
      if (streams == 0) continue;
      const ComplexMatrix v =
          preimage(channels.direct[i], target.leftCols(streams), tol);
      jam[i] = orth(v, tol);
      if (jam[i].cols() != streams)
        throw Error(Errc::Singular, "aligned precoder lost rank");
    }
  }
  return jam;
}

std::vector<ComplexMatrix> legitimate_precoders(
    const ChannelSet& channels, const std::vector<ComplexMatrix>& jam,
    const StreamAllocation& alloc, Tolerance) {
  const Eigen::Index m = channels.direct[0].cols();
  std::vector<ComplexMatrix> message;
  message.reserve(jam.size());
  for (std::size_t i = 0; i < jam.size(); ++i) {
    const ComplexMatrix free_space = complement(jam[i]);
    if (alloc.message[i] > free_space.cols()) {
      std::ostringstream msg;
      msg << "transmitter " << i << " cannot carry " << alloc.message[i]
          << " message streams next to " << jam[i].cols()
          << " jamming streams with " << m << " antennas";
      throw Error(Errc::TooManyStreams, msg.str());
    }
    message.push_back(free_space.leftCols(alloc.message[i]));
  }
  return message;
}

namespace {

ComplexMatrix zero_force(const std::vector<ComplexMatrix>& rx_channels,
                         const std::vector<ComplexMatrix>& jam,
                         const std::vector<ComplexMatrix>& extra_kill,
                         Tolerance tol) {
  const Eigen::Index n = rx_channels[0].rows();
  std::vector<ComplexMatrix> kept;
  Eigen::Index total = 0;
  for (std::size_t i = 0; i < jam.size(); ++i) {
    const ComplexMatrix received = rx_channels[i] * jam[i];
    // columns already nulled by the channel (nullspace jamming) are not part
    // of the receiver-side jamming span
    const double floor = 1e-8 * (1.0 + rx_channels[i].norm());
    for (Eigen::Index c = 0; c < received.cols(); ++c)
      if (received.col(c).norm() > floor) {
        kept.push_back(received.col(c));
        ++total;
      }
  }
  for (const auto& extra : extra_kill) {
    for (Eigen::Index c = 0; c < extra.cols(); ++c) {
      kept.push_back(extra.col(c));
      ++total;
    }
  }
  if (total == 0) return ComplexMatrix::Identity(n, n);
  ComplexMatrix stack(n, total);
  for (Eigen::Index c = 0; c < total; ++c) stack.col(c) = kept[c];
  const ComplexMatrix killed = orth(stack, tol);
  if (killed.cols() >= n) {
    std::ostringstream msg;
    msg << "jamming and interference fill all " << n
        << " receiver dimensions";
    throw Error(Errc::NoFreeSpace, msg.str());
  }
  return complement(killed).adjoint();
}

}  // namespace

ComplexMatrix receiver_zero_forcer(const ChannelSet& channels,
                                   const std::vector<ComplexMatrix>& jam,
                                   const std::vector<ComplexMatrix>& extra_kill,
                                   Tolerance tol, int receiver) {
  const auto& rx_channels =
      channels.kind == Kind::MAC ? channels.direct : channels.cross[receiver];
  return zero_force(rx_channels, jam, extra_kill, tol);
}

namespace {

// Round-robin distribution of `target` message streams, earlier
// transmitters first on ties, respecting per-transmitter antenna room.
std::vector<int> distribute_streams(int target, const std::vector<int>& cap) {
  std::vector<int> d(cap.size(), 0);
  int remaining = target;
  while (remaining > 0) {
    int pick = -1;
    for (std::size_t i = 0; i < cap.size(); ++i)
      if (d[i] < cap[i] && (pick < 0 || d[i] < d[pick]))
        pick = static_cast<int>(i);
    if (pick < 0) break;
    ++d[pick];
    --remaining;
  }
  return d;
}

Scheme scheme_for(Regime regime) {
  switch (regime) {
    case Regime::BelowN: return Scheme::Aligned;
    case Regime::Middle: return Scheme::Hybrid;
    case Regime::AboveN: return Scheme::Nullspace;
  }
  return Scheme::Auto;
}

PrecoderBuild build_mac(const SystemConfig& cfg, const ChannelSet& channels,
                        Tolerance tol) {
  const Regime regime = classify_regime(cfg);
  const Scheme scheme = scheme_for(regime);
  if (cfg.scheme != Scheme::Auto && cfg.scheme != scheme) {
    std::ostringstream msg;
    msg << "scheme " << to_string(cfg.scheme)
        << " was forced but the antenna counts fall in regime "
        << to_string(regime) << ", which needs " << to_string(scheme);
    throw Error(Errc::SchemeRegimeMismatch, msg.str());
  }
  const int k = cfg.num_tx;
  const int m = cfg.tx_antennas;
  const int n = cfg.rx_antennas;
  const int ne = cfg.max_eve_antennas;

  PrecoderBuild build;
  build.scheme = scheme;
  auto& alloc = build.allocation;
  alloc.null_jam.assign(k, 0);
  alloc.aligned_jam.assign(k, 0);
  auto& jam = build.precoders.jam;
  jam.assign(k, ComplexMatrix(m, 0));

  int occupied = 0;  // receiver dimensions lost to jamming
  if (scheme == Scheme::Nullspace) {
    for (int i = 0; i < k; ++i) {
      alloc.null_jam[i] = ne / k;
      jam[i] = nullspace_precoder(channels.direct[i], ne / k, tol);
    }
  } else if (scheme == Scheme::Aligned) {
    build.plan = plan_groups(cfg);
    const auto aligned = aligned_precoders(channels, build.plan, tol);
    for (std::size_t g = 0; g < build.plan.members.size(); ++g) {
      occupied += build.plan.occupied(static_cast<int>(g));
      for (std::size_t j = 0; j < build.plan.members[g].size(); ++j)
        alloc.aligned_jam[build.plan.members[g][j]] =
            build.plan.member_streams[g][j];
    }
    jam = aligned;
  } else {
    build.plan = plan_groups(cfg);
    const auto aligned = aligned_precoders(channels, build.plan, tol);
    for (std::size_t g = 0; g < build.plan.members.size(); ++g) {
      occupied += build.plan.occupied(static_cast<int>(g));
      for (std::size_t j = 0; j < build.plan.members[g].size(); ++j)
        alloc.aligned_jam[build.plan.members[g][j]] =
            build.plan.member_streams[g][j];
    }
    for (int i = 0; i < k; ++i) {
      alloc.null_jam[i] = m - n;
      const ComplexMatrix null_part =
          nullspace_precoder(channels.direct[i], m - n, tol);
      ComplexMatrix both(m, alloc.null_jam[i] + alloc.aligned_jam[i]);
      both << null_part, aligned[i];
      jam[i] = both;
    }
  }

  std::vector<int> cap(k);
  for (int i = 0; i < k; ++i) cap[i] = m - static_cast<int>(jam[i].cols());
  const int target = std::min(k * m - ne, n - occupied);
  alloc.message = distribute_streams(target, cap);
  build.precoders.message =
      legitimate_precoders(channels, jam, alloc, tol);
  build.precoders.post = {receiver_zero_forcer(channels, jam, {}, tol)};
  return build;
}

PrecoderBuild build_ic(const SystemConfig& cfg, const ChannelSet& channels,
                       Tolerance tol) {
  if (cfg.scheme != Scheme::Auto && cfg.scheme != Scheme::Aligned)
    throw Error(Errc::SchemeRegimeMismatch,
                "the interference channel uses aligned jamming only");
  const int m = cfg.tx_antennas;
  const int half = cfg.max_eve_antennas / 2;
  const auto& cross = channels.cross;
  for (int rx = 0; rx < 2; ++rx)
    for (int tx = 0; tx < 2; ++tx)
      if (rank(cross[rx][tx], tol) < m)
        throw Error(Errc::Singular, "cross channel is rank deficient");

  // Alignment at receiver 1 is exact by construction; alignment at
  // receiver 2 holds because V1 spans an invariant subspace of the loop
  // matrix H21^-1 H22 H12^-1 H11.
  const ComplexMatrix inner = solve(cross[0][1], cross[0][0], tol);
  const ComplexMatrix loop = solve(cross[1][0], (cross[1][1] * inner).eval(), tol);
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(loop);
  if (eig.info() != Eigen::Success)
    throw Error(Errc::Singular, "eigendecomposition of the loop matrix failed");
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  const auto& values = eig.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ma = std::abs(values(a));
    const double mb = std::abs(values(b));
    if (ma != mb) return ma > mb;
    if (values(a).real() != values(b).real())
      return values(a).real() > values(b).real();
    return values(a).imag() > values(b).imag();
  });
  ComplexMatrix selected(m, half);
  for (int c = 0; c < half; ++c)
    selected.col(c) = eig.eigenvectors().col(order[c]);
  PrecoderBuild build;
  build.scheme = Scheme::Aligned;
  auto& pre = build.precoders;
  pre.jam.resize(2);
  pre.jam[0] = orth(selected, tol);
  pre.jam[1] = orth((inner * pre.jam[0]).eval(), tol);
  if (pre.jam[0].cols() != half || pre.jam[1].cols() != half)
    throw Error(Errc::Singular, "loop matrix has a defective eigenspace");

  auto& alloc = build.allocation;
  alloc.null_jam = {0, 0};
  alloc.aligned_jam = {half, half};
  const int sum_message = m - half;
  alloc.message = {sum_message - sum_message / 2, sum_message / 2};
  pre.message = legitimate_precoders(channels, pre.jam, alloc, tol);
  pre.post.resize(2);
  for (int rx = 0; rx < 2; ++rx) {
    const int other = 1 - rx;
    const std::vector<ComplexMatrix> extra = {cross[rx][other] *
                                              pre.message[other]};
    pre.post[rx] = zero_force(cross[rx], pre.jam, extra, tol);
  }
  return build;
}

}  // namespace

PrecoderSet hybrid_precoders(const SystemConfig& cfg,
                             const ChannelSet& channels, Tolerance tol) {
  validate_config(cfg);
  if (classify_regime(cfg) != Regime::Middle) {
    std::ostringstream msg;
    msg << "hybrid jamming applies to N <= M < N + N_E/K only; regime is "
        << to_string(classify_regime(cfg));
    throw Error(Errc::NotApplicable, msg.str());
  }
  return build_mac(cfg, channels, tol).precoders;
}

PrecoderSet ic_precoders(const ChannelSet& channels, Tolerance tol) {
  SystemConfig cfg;
  cfg.kind = Kind::IC;
  cfg.num_tx = 2;
  cfg.tx_antennas = static_cast<int>(channels.cross[0][0].rows());
  cfg.rx_antennas = cfg.tx_antennas;
  cfg.max_eve_antennas =
      channels.eve.empty() ? 2 : static_cast<int>(channels.eve[0][0].rows());
  validate_config(cfg);
  return build_ic(cfg, channels, tol).precoders;
}

PrecoderBuild build_precoder_set(const SystemConfig& cfg,
                                 const ChannelSet& channels, Tolerance tol) {
  validate_config(cfg);
  return cfg.kind == Kind::MAC ? build_mac(cfg, channels, tol)
                               : build_ic(cfg, channels, tol);
}

}  // namespace secdof
