#include "warrant/schemas.hpp"

#include <stdexcept>

#include "warrant/dsl.hpp"

namespace warrant {
namespace {

constexpr std::string_view kSources[] = {
    R"dsl((def-forwards-reason PERCEPTION
  :forwards-premises "(p at time)" (:kind :percept)
  :conclusion "(p at time)"
  :variables p time
  :defeasible? T
  :strength .98))dsl",

    R"dsl((def-backwards-undercutter PERCEPTUAL-RELIABILITY
  :defeatee PERCEPTION
  :forwards-premises
    "((the probability of p given ((I have a percept with content p) & R)) <= s)"
    (:condition (and (s < 0.99) (temporally-projectible R)))
  :backwards-premises
    "(R at time)"
  :variables p time R s
  :defeasible? T))dsl",

    R"dsl((def-backwards-reason TEMPORAL-PROJECTION
  :conclusion "(p at time)"
  :condition (and (temporally-projectible p) (numberp time))
  :forwards-premises
    "(p at time0)"
    (:condition (and (time0 < time) ((time - time0) < ((log .5) / (log *temporal-decay*)))))
  :variables p time0 time
  :defeasible? T
  :strength (- (* 2 (expt *temporal-decay* (- time time0))) 1)))dsl",

    R"dsl((def-forwards-reason STATISTICAL-SYLLOGISM
  :forwards-premises
    "((the probability of A given B) >= r)"
    (:condition (r >= *statistical-threshold*))
    "(c is a B)"
  :conclusion "(c is an A)"
  :variables A B c r
  :defeasible? T
  :strength r))dsl",

    R"dsl((def-backwards-undercutter CAUSAL-UNDERCUTTER
  :defeatee TEMPORAL-PROJECTION
  :forwards-premises
    "(A when Q is causally sufficient for ~p after an interval interval)"
    "(A at time1)"
    (:condition (and (time0 <= time1) ((time1 + interval) < time)))
  :backwards-premises
    "(Q at time1)"
  :variables A Q time1 interval
  :defeasible? T))dsl",

    R"dsl((def-backwards-reason CAUSAL-IMPLICATION
  :conclusion "(Q throughout (op time* time**))"
  :condition (and (<= time* time**) ((time** - time*) < ((log .5) / (log *temporal-decay*))))
  :forwards-premises
    "(A when P is causally sufficient for Q after an interval interval)"
    (:condition (every #temporally-projectible (conjuncts Q)))
    "(A at time)"
    (:condition
      (or (and (eq op clopen) ((time + interval) <= time*) (time* < time**)
               ((time** - (time + interval)) < ((log .5) / (log *temporal-decay*))))
          (and (eq op closed) ((time + interval) < time*) (time* <= time**)
               ((time** - (time + interval)) < ((log .5) / (log *temporal-decay*))))
          (and (eq op open) ((time + interval) <= time*) (time* < time**)
               ((time** - (time + interval)) < ((log .5) / (log *temporal-decay*))))))
  :backwards-premises
    "(P at time)"
  :variables A P Q interval time time* time** op
  :strength (- (* 2 (expt *temporal-decay* (- time** time))) 1)
  :defeasible? T))dsl",

    R"dsl((def-backwards-reason INTERVAL-INSTANTIATION
  :conclusion "(Q at time)"
  :condition (numberp time)
  :backwards-premises "(Q throughout (closed time time))"
  :variables Q time))dsl",

    R"dsl((def-backwards-reason adjunction
  :conclusion "(P & Q)"
  :backwards-premises "P" "Q"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason simplification-left
  :forwards-premises "(P & Q)"
  :conclusion "P"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason simplification-right
  :forwards-premises "(P & Q)"
  :conclusion "Q"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason modus-ponens
  :forwards-premises "(P -> Q)" "P"
  :conclusion "Q"
  :variables P Q))dsl",

    R"dsl((def-backwards-reason backwards-modus-ponens
  :conclusion "Q"
  :forwards-premises "(P -> Q)"
  :backwards-premises "P"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason modus-tollens
  :forwards-premises "(P -> Q)" "~Q"
  :conclusion "~P"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason disjunctive-syllogism-left
  :forwards-premises "(P v Q)" "~P"
  :conclusion "Q"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason disjunctive-syllogism-right
  :forwards-premises "(P v Q)" "~Q"
  :conclusion "P"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason biconditional-left
  :forwards-premises "(P <-> Q)"
  :conclusion "(P -> Q)"
  :variables P Q))dsl",

    R"dsl((def-forwards-reason biconditional-right
  :forwards-premises "(P <-> Q)"
  :conclusion "(Q -> P)"
  :variables P Q))dsl",
};

std::vector<Reason> load() {
  std::vector<Reason> out;
  for (auto src : kSources) {
    ReasonLookup lookup = [&out](std::string_view name) -> const Reason* {
      for (const auto& r : out) {
        if (r.name == name) return &r;
      }
      return nullptr;
    };
    out.push_back(parse_schema(src, lookup));
  }
  return out;
}

}  // namespace

const std::vector<Reason>& builtin_schemas() {
  static const std::vector<Reason> library = load();
  return library;
}

const Reason* find_builtin(std::string_view name) {
  for (const auto& r : builtin_schemas()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const Reason& builtin(std::string_view name) {
  if (const Reason* r = find_builtin(name)) return *r;
  throw std::out_of_range("unknown built-in schema " + std::string(name));
}

std::string builtin_library_text() {
  std::string out;
  for (auto src : kSources) {
    out += src;
    out += "\n\n";
  }
  return out;
}

}  // namespace warrant
