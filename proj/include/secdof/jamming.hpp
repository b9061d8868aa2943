#pragma once

#include <vector>

#include "secdof/linalg.hpp"
#include "secdof/scenario.hpp"

namespace secdof {

// Per-transmitter stream budget. Message and jamming columns together may
// not exceed the antenna count, and the jamming columns across all
// transmitters always total N_E so that every eavesdropper's signal space
// is filled.
struct StreamAllocation {
  std::vector<int> message;      // d_i
  std::vector<int> null_jam;     // streams precoded into ker(H_i)
  std::vector<int> aligned_jam;  // streams aligned at the receiver

  int jam(int i) const { return null_jam[i] + aligned_jam[i]; }
  int total_message() const;
  int total_jam() const;
};

// Aligned-jamming group structure: which transmitters align together, how
// many jamming streams each group carries, and (once channels are known)
// the receiver-side intersection basis the group aims at.
struct GroupPlan {
  int group_size = 0;                           // L
  int aligned_total = 0;                        // streams needing alignment
  std::vector<std::vector<int>> members;        // per group: tx indices
  std::vector<int> group_streams;               // J_g
  std::vector<std::vector<int>> member_streams; // parallel to members
  std::vector<ComplexMatrix> intersection;      // filled by aligned_precoders

  // receiver dimensions occupied by group g
  int occupied(int g) const {
    const int l = static_cast<int>(members[g].size());
    return (group_streams[g] + l - 1) / l;
  }
};

struct PrecoderSet {
  std::vector<ComplexMatrix> message;  // V^L_i, M x d_i
  std::vector<ComplexMatrix> jam;      // V^J_i, M x jam(i), [null | aligned]
  std::vector<ComplexMatrix> post;     // U per legitimate receiver
};

struct PrecoderBuild {
  PrecoderSet precoders;
  StreamAllocation allocation;
  GroupPlan plan;   // empty group_size = 0 when no alignment is used
  Scheme scheme = Scheme::Auto;
};

// Jamming precoder living in ker(h): invisible at the legitimate receiver,
// fully visible to eavesdroppers. Throws TooManyStreams past the nullity.
ComplexMatrix nullspace_precoder(const ComplexMatrix& h, int streams,
                                 Tolerance tol = {});

// Picks the largest alignment group size L in {2..K} such that the
// receiver-side intersection can absorb ceil(needed/L) dimensions
// (L(M-N)+M >= ceil(needed/L)) and the group can carry all needed streams
// (L*(L(M-N)+M) >= needed). Streams are split evenly across members, extras
// to the lowest indices. A single transmitter cannot align with anyone, so
// L=1 never qualifies. Throws Infeasible naming the binding constraint.
GroupPlan plan_groups(const SystemConfig& cfg);

// Builds the per-transmitter aligned jamming precoders for `plan`: each
// group computes the intersection of its members' received signal spans,
// targets its leading columns, and solves H_i V_i = target per member
// (square row-block solve for M <= N, minimum-norm solve for wide
// channels). Columns are re-orthonormalized. Fills plan.intersection.
std::vector<ComplexMatrix> aligned_precoders(const ChannelSet& channels,
                                             GroupPlan& plan,
                                             Tolerance tol = {});

// Middle-regime construction: M-N nullspace streams plus N_E/K-(M-N)
// aligned streams per transmitter. Throws NotApplicable outside the regime.
PrecoderSet hybrid_precoders(const SystemConfig& cfg,
                             const ChannelSet& channels, Tolerance tol = {});

// Interference-channel construction: V1 spans an invariant subspace of
// H21^-1 H22 H12^-1 H11 and V2 = orth(H12^-1 H11 V1), so the two jamming
// signals overlap in N_E/2 dimensions at both receivers.
PrecoderSet ic_precoders(const ChannelSet& channels, Tolerance tol = {});

// Message precoders orthogonal to the jamming columns, so every
// [V^L_i V^J_i] is column-orthonormal.
std::vector<ComplexMatrix> legitimate_precoders(
    const ChannelSet& channels, const std::vector<ComplexMatrix>& jam,
    const StreamAllocation& alloc, Tolerance tol = {});

// Rows spanning the orthogonal complement, at the given receiver, of the
// received jamming spans plus any extra spans to kill (the IC uses those
// for the cross message). Numerically-nulled jamming columns are ignored.
// Throws NoFreeSpace when the killed space fills the receiver.
ComplexMatrix receiver_zero_forcer(const ChannelSet& channels,
                                   const std::vector<ComplexMatrix>& jam,
                                   const std::vector<ComplexMatrix>& extra_kill,
                                   Tolerance tol = {}, int receiver = 0);

// Scheme dispatch: picks the regime-appropriate construction (or checks a
// forced scheme against the regime), builds jamming and message precoders
// with the round-robin stream split, and the zero-forcing post-processors.
PrecoderBuild build_precoder_set(const SystemConfig& cfg,
                                 const ChannelSet& channels,
                                 Tolerance tol = {});

}  // namespace secdof
