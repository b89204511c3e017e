#pragma once

#include "quadchain/arith.hpp"
#include "quadchain/chain.hpp"
#include "quadchain/error.hpp"
#include "quadchain/residues.hpp"
#include "quadchain/search.hpp"
#include "quadchain/triples.hpp"
