#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "normgraph/quotient.hpp"
#include "normgraph/realization.hpp"

namespace normgraph {

using Rational = boost::multiprecision::cpp_rational;

// Weights indexed by Alphabet::index_of.
template <class W>
using Weights = std::vector<W>;

template <class W>
using WeightMap = std::map<std::string, Weights<W>>;

// mu(v) = sum over codewords with c_target = v of the product of the other
// incoming weights. `incoming` must cover every other factor of c.
template <class W>
Weights<W> sp_update(const CodeSubgroup& c, const WeightMap<W>& incoming, const std::string& target);

// Message over the cosets of C:V in C|V.
template <class W>
struct ReducedMessage {
  CodeSubgroup trimmed, nondynamical;
  Quotient quotient;
  Weights<W> weights;  // indexed by the quotient alphabet
};

template <class W>
ReducedMessage<W> message_reduce(const CodeSubgroup& c, const std::string& var, const Weights<W>& msg);
// Spreads each coset total evenly over the coset; zero outside C|V.
template <class W>
Weights<W> message_expand(const ReducedMessage<W>& m);

enum class Schedule { Flooding, Serial };

struct DecodeOptions {
  int max_iterations = 50;
  Schedule schedule = Schedule::Flooding;
  double damping = 0.0;
  double tolerance = 1e-8;
  bool reduce_messages = false;  // trim and merge every incoming message first
};

template <class W>
struct DecodeResult {
  WeightMap<W> marginals;  // symbols and internal states (tail coordinates), normalized
  WeightMap<W> extrinsic;  // message into each external variable from its constraint
  bool contradiction = false;
};

template <class W>
struct IterativeResult : DecodeResult<W> {
  std::vector<double> deltas;  // max change of a normalized core message per iteration
  int iterations = 0;
  bool converged = false;
};

// Missing priors default to all-ones weights.
template <class W>
DecodeResult<W> decode_exact(const NormalRealization& r, const WeightMap<W>& priors, const DecodeOptions& opt = {});
template <class W>
IterativeResult<W> decode_iterative(const NormalRealization& r, const WeightMap<W>& priors,
                                    const DecodeOptions& opt = {});
template <class W>
DecodeResult<W> brute_force_app(const NormalRealization& r, const WeightMap<W>& priors);

template <class W>
Weights<W> normalized(const Weights<W>& w);

// Shortest decimal form of x as an exact fraction, e.g. 0.9 -> 9/10.
Rational rational_from_double(double x);
// "9/10", "0.9", "3" or "1e-3".
Rational rational_from_string(const std::string& s);

}  // namespace normgraph
