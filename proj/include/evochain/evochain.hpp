// evochain: self-replicating NFT agents on a minimal account ledger
// Copyright 2026 The evochain Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "agentvm.hpp"
#include "config.hpp"
#include "exports.hpp"
#include "gateway.hpp"
#include "genome.hpp"
#include "hash.hpp"
#include "ledger.hpp"
#include "market.hpp"
#include "morphogen.hpp"
#include "phylo.hpp"
#include "random.hpp"
#include "serialize.hpp"
#include "simulation.hpp"
#include "types.hpp"
#include "world.hpp"
