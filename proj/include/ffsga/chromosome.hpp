#pragma once

#include <cstdint>
#include <vector>

#include "ffsga/instance.hpp"

namespace ffsga {

class Rng;

// Machine-assignment genotype, integer view. Gene i holds the machine
// index of job i/S at stage i mod S.
struct IntChromosome {
    std::vector<int> genes;
};

// Bit slot layout of the binary view: gene i occupies bits_per_stage of
// its stage, most significant bit first, slots concatenated in gene order.
struct BitLayout {
    int num_jobs = 0;
    int num_stages = 0;
    std::vector<int> bits_per_stage;   // max(1, ceil(log2 machines))
    std::vector<int> stage_bit_offset; // prefix sums within one job
    int bits_per_job = 0;
    int total_bits = 0;
    std::vector<int> machines_per_stage;

    static BitLayout for_instance(const Instance& inst);

    int gene_offset(int gene) const {
        return (gene / num_stages) * bits_per_job + stage_bit_offset[gene % num_stages];
    }
    int num_genes() const { return num_jobs * num_stages; }
};

// Binary view; one byte per bit, values 0/1.
struct BitChromosome {
    std::vector<std::uint8_t> bits;
};

BitChromosome int_to_bits(const IntChromosome& c, const BitLayout& layout);

// Every bit pattern decodes: the slot value is taken modulo the stage's
// machine count, so complemented chromosomes stay feasible.
IntChromosome bits_to_int(const BitChromosome& b, const BitLayout& layout);

BitChromosome complement(const BitChromosome& b);

// Gene-major uniform draw over each gene's valid machine range.
IntChromosome random_int_chromosome(const Instance& inst, Rng& rng);

}  // namespace ffsga
