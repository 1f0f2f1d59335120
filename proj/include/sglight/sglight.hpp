#pragma once

#include <sglight/analytic_propagator.hpp>
#include <sglight/atomic_response.hpp>
#include <sglight/derived.hpp>
#include <sglight/effective_hamiltonian.hpp>
#include <sglight/error.hpp>
#include <sglight/polariton.hpp>
#include <sglight/scenario.hpp>
#include <sglight/spectral_propagator.hpp>
#include <sglight/split_classifier.hpp>
