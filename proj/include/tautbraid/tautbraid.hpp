#pragma once

#include "tautbraid/arrangement.hpp"
#include "tautbraid/braid.hpp"
#include "tautbraid/branched.hpp"
#include "tautbraid/certificate.hpp"
#include "tautbraid/normal_form.hpp"
#include "tautbraid/oracle.hpp"
#include "tautbraid/pipeline.hpp"
#include "tautbraid/surface.hpp"
#include "tautbraid/svg.hpp"
#include "tautbraid/switch_system.hpp"
#include "tautbraid/train_track.hpp"
