#pragma once

namespace smc::testing {

// Fault-injection switches for mutation sentinels. Flipping one corrupts a
// documented piece of semantics so the verification suites can demonstrate
// they would catch it. Toggle only from single-threaded test code.
struct MutationHooks {
    // perm_of(DistL(...)) returns the identity position map instead of the
    // first-factor-major shuffle.
    bool distl_identity_perm = false;
    // span_compose enumerates matched pairs second-factor-major.
    bool span_compose_swapped_pairs = false;
};

MutationHooks& mutation_hooks();

// RAII guard: sets the named hook for the current scope.
class ScopedMutation {
  public:
    explicit ScopedMutation(bool MutationHooks::* flag) : flag_(flag) {
        mutation_hooks().*flag_ = true;
    }
    ~ScopedMutation() { mutation_hooks().*flag_ = false; }
    ScopedMutation(const ScopedMutation&) = delete;
    ScopedMutation& operator=(const ScopedMutation&) = delete;

  private:
    bool MutationHooks::* flag_;
};

}  // namespace smc::testing
