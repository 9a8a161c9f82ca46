#include "ffsga/chromosome.hpp"

#include <bit>

#include "ffsga/errors.hpp"
#include "ffsga/rng.hpp"

namespace ffsga {

BitLayout BitLayout::for_instance(const Instance& inst) {
    BitLayout layout;
    layout.num_jobs = inst.num_jobs;
    layout.num_stages = inst.num_stages;
    layout.machines_per_stage = inst.machines_per_stage;
    layout.bits_per_stage.resize(inst.num_stages);
    layout.stage_bit_offset.assign(inst.num_stages + 1, 0);
    for (int s = 0; s < inst.num_stages; ++s) {
        unsigned m = static_cast<unsigned>(inst.machines_per_stage[s]);
        int bits = std::max(1, static_cast<int>(std::bit_width(m - 1)));
        layout.bits_per_stage[s] = bits;
        layout.stage_bit_offset[s + 1] = layout.stage_bit_offset[s] + bits;
    }
    layout.bits_per_job = layout.stage_bit_offset[inst.num_stages];
    layout.total_bits = layout.num_jobs * layout.bits_per_job;
    return layout;
}

BitChromosome int_to_bits(const IntChromosome& c, const BitLayout& layout) {
    if (static_cast<int>(c.genes.size()) != layout.num_genes())
        throw ContractError("int_to_bits: gene count does not match layout");
    BitChromosome out;
    out.bits.assign(layout.total_bits, 0);
    for (int i = 0; i < layout.num_genes(); ++i) {
        int stage = i % layout.num_stages;
        int bits = layout.bits_per_stage[stage];
        int offset = layout.gene_offset(i);
        unsigned value = static_cast<unsigned>(c.genes[i]);
        for (int b = 0; b < bits; ++b)
            out.bits[offset + b] = static_cast<std::uint8_t>((value >> (bits - 1 - b)) & 1u);
    }
    return out;
}

IntChromosome bits_to_int(const BitChromosome& b, const BitLayout& layout) {
    if (static_cast<int>(b.bits.size()) != layout.total_bits)
        throw ContractError("bits_to_int: bit count does not match layout");
    IntChromosome out;
    out.genes.resize(layout.num_genes());
    for (int i = 0; i < layout.num_genes(); ++i) {
        int stage = i % layout.num_stages;
        int bits = layout.bits_per_stage[stage];
        int offset = layout.gene_offset(i);
        unsigned value = 0;
        for (int bit = 0; bit < bits; ++bit)
            value = (value << 1) | b.bits[offset + bit];
        out.genes[i] = static_cast<int>(value % static_cast<unsigned>(layout.machines_per_stage[stage]));
    }
    return out;
}

BitChromosome complement(const BitChromosome& b) {
    BitChromosome out;
    out.bits.resize(b.bits.size());
    for (std::size_t i = 0; i < b.bits.size(); ++i) out.bits[i] = b.bits[i] ^ 1u;
    return out;
}

IntChromosome random_int_chromosome(const Instance& inst, Rng& rng) {
    IntChromosome c;
    c.genes.resize(inst.num_genes());
    for (int i = 0; i < inst.num_genes(); ++i)
        c.genes[i] = rng.next_index(inst.machines_per_stage[i % inst.num_stages]);
    return c;
}

}  // namespace ffsga
