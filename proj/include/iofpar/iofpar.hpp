#pragma once

#include "canonical.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "normalform.hpp"
#include "relations.hpp"
#include "rewriter.hpp"
#include "transformation.hpp"
#include "verifier.hpp"
#include "word.hpp"
