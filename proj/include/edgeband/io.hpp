#pragma once

#include <string>

#include "edgeband/envelope.hpp"
#include "edgeband/oracle.hpp"
#include "edgeband/solver.hpp"
#include "edgeband/sweep.hpp"

namespace edgeband {

// Instance document: {"params": {...}, "levels": [...], "fusion": {...}}.
// See the README for the full schema. Throws SchemaError on malformed input.
ProblemInstance instance_from_json_text(const std::string& text);
ProblemInstance load_instance(const std::string& path);

// Deterministic serializations: identical inputs produce identical bytes.
std::string result_to_json(const AllocationResult& result);
std::string oracle_result_to_json(const OracleResult& result);

// CSV with header "M,L_M,q,rho": `samples` uniform points over the domain
// merged with every knot.
std::string envelope_to_csv(const Envelope& envelope, int samples);

std::string sweep_to_csv(const SweepTable& table);
SweepTable sweep_from_csv(const std::string& text);  // exact round-trip

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace edgeband
