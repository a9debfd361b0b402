#pragma once

#include "fusion/error.hpp"
#include "fusion/group.hpp"
#include "fusion/group_ops.hpp"
#include "fusion/lattice.hpp"
#include "fusion/morphism.hpp"
#include "fusion/fusion_system.hpp"
#include "fusion/autgroup.hpp"
#include "fusion/saturation.hpp"
#include "fusion/subsystems.hpp"
#include "fusion/models.hpp"
#include "fusion/centralizers.hpp"
#include "fusion/products.hpp"
#include "fusion/io.hpp"
#include "fusion/verify.hpp"
