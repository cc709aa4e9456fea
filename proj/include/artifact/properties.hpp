#pragma once
// Seeded random instances of the algebraic laws.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "artifact/phase.hpp"

namespace artifact {

struct PropertyResult {
    std::string law;
    int instances = 0;
    int failures = 0;
    std::string first_failure;
};

struct PropertyOptions {
    uint64_t seed = 1;
    int count = 100;  // instances per law
};

// Laws: d^2 = 0, wedge associativity, hook antiderivation, graded Jacobi of the Lie
// bracket, Loday identity, right Leibniz rule, generalised commutativity, normal form
// idempotence, kernel_dim order invariance, structural round trip.
std::vector<PropertyResult> run_property_suite(const PropertyOptions& opt = {});

// Generators, exposed for the tests.
class FormGen {
public:
    FormGen(const PhaseSpace& ps, uint64_t seed) : ps_(ps), rng_(seed) {}
    int uniform(int lo, int hi);  // inclusive
    Q coefficient();              // nonzero small rational
    // product of up to max_coords coordinates (x, fiber, momenta) with random coefficient
    Expr function(int max_coords = 2);
    // sum of terms of form degree k and parity p (p = -1: any parity, single term)
    Form form(int k, int p = -1, int terms = 2);
    VectorField vector_field(int parity, int comps = 2);
    // random canonical observable combination of parity h: coordinate observables,
    // momentum observables, lifted momentum observables
    Form observable(int h);
    // configuration function of parity h (products of configuration coordinates)
    Expr config_function(int h);
    std::mt19937_64& rng() { return rng_; }

private:
    const PhaseSpace& ps_;
    std::mt19937_64 rng_;
};

}  // namespace artifact
