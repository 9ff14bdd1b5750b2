#include "permuqc/schedule.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace permuqc {

void Schedule::append(const Schedule& other) {
  if (other.num_qubits != num_qubits)
    throw std::invalid_argument("Schedule::append: width mismatch");
  layers.insert(layers.end(), other.layers.begin(), other.layers.end());
}

void validate_schedule(const Schedule& schedule) {
  for (const auto& layer : schedule.layers) validate_layer(layer, schedule.num_qubits);
}

SparseState apply_schedule(const SparseState& s, const Schedule& schedule) {
  if (s.num_qubits != schedule.num_qubits)
    throw std::invalid_argument("apply_schedule: qubit count mismatch");
  SparseState cur = s;
  for (const auto& layer : schedule.layers) cur = apply_layer(cur, layer);
  return cur;
}

int timesteps(const Schedule& schedule) {
  int count = 0;
  for (const auto& layer : schedule.layers) {
    bool resonant = std::any_of(layer.ops.begin(), layer.ops.end(), [](const GateOp& op) {
      return std::holds_alternative<Exchange>(op) || std::holds_alternative<Fredkin>(op);
    });
    if (resonant) ++count;
  }
  return count;
}

GateTally tally_gates(const Schedule& schedule) {
  GateTally t;
  for (const auto& layer : schedule.layers) {
    for (const auto& op : layer.ops) {
      if (std::holds_alternative<PermGate>(op)) ++t.perms;
      else if (std::holds_alternative<Exchange>(op)) ++t.exchanges;
      else if (std::holds_alternative<Fredkin>(op)) ++t.fredkins;
      else ++t.phases;
    }
  }
  return t;
}

Schedule embed_schedule(const Schedule& schedule, int offset, int total_qubits) {
  if (offset < 0 || schedule.num_qubits + offset > total_qubits)
    throw std::invalid_argument("embed_schedule: window out of range");
  Schedule out;
  out.num_qubits = total_qubits;
  for (const auto& layer : schedule.layers) {
    Layer shifted;
    shifted.origin = layer.origin;
    for (const auto& op : layer.ops) {
      if (const auto* pg = std::get_if<PermGate>(&op)) {
        std::vector<int> image(static_cast<std::size_t>(total_qubits));
        for (int q = 1; q <= total_qubits; ++q) image[static_cast<std::size_t>(q - 1)] = q;
        for (int q = 1; q <= schedule.num_qubits; ++q)
          image[static_cast<std::size_t>(offset + q - 1)] = offset + pg->perm.image_of(q);
        shifted.ops.push_back(PermGate{perm_from_image(total_qubits, std::move(image))});
      } else if (const auto* ex = std::get_if<Exchange>(&op)) {
        shifted.ops.push_back(Exchange{ex->i + offset, ex->j + offset, ex->theta});
      } else if (const auto* fr = std::get_if<Fredkin>(&op)) {
        shifted.ops.push_back(Fredkin{fr->control + offset, fr->a + offset, fr->b + offset});
      } else {
        shifted.ops.push_back(op);
      }
    }
    out.push(std::move(shifted));
  }
  return out;
}

CompiledSchedule compile_relabeling(const Schedule& schedule) {
  CompiledSchedule out;
  out.schedule.num_qubits = schedule.num_qubits;
  QubitPermutation acc = identity_perm(schedule.num_qubits);
  QubitPermutation acc_inv = acc;
  for (const auto& layer : schedule.layers) {
    Layer compiled;
    compiled.origin = layer.origin;
    for (const auto& op : layer.ops) {
      if (const auto* pg = std::get_if<PermGate>(&op)) {
        acc = compose(pg->perm, acc);
        acc_inv = inverse(acc);
      } else if (const auto* ex = std::get_if<Exchange>(&op)) {
        compiled.ops.push_back(
            Exchange{acc_inv.image_of(ex->i), acc_inv.image_of(ex->j), ex->theta});
      } else if (const auto* fr = std::get_if<Fredkin>(&op)) {
        compiled.ops.push_back(Fredkin{acc_inv.image_of(fr->control),
                                       acc_inv.image_of(fr->a), acc_inv.image_of(fr->b)});
      } else {
        compiled.ops.push_back(op);
      }
    }
    if (!compiled.ops.empty()) out.schedule.push(std::move(compiled));
  }
  out.map.perm = acc;
  return out;
}

void to_json(nlohmann::ordered_json& j, const Schedule& schedule) {
  j = nlohmann::ordered_json::object();
  j["n"] = schedule.num_qubits;
  j["timesteps"] = timesteps(schedule);
  auto layers = nlohmann::ordered_json::array();
  for (const auto& layer : schedule.layers) {
    nlohmann::ordered_json l;
    to_json(l, layer);
    layers.push_back(std::move(l));
  }
  j["layers"] = std::move(layers);
}

}  // namespace permuqc
