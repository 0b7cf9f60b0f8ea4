/**
 * Purely visual state: orbit camera parameters plus the axes / dark-mode /
 * help toggles. Engine-owned toggles (axes, help) are applied from events so
 * the event stream stays the single source of truth; dark mode is UI-only.
 */

export interface ViewState {
  azimuthRad: number;
  elevationRad: number;
  zoom: number;
  axesVisible: boolean;
  darkMode: boolean;
  helpOpen: boolean;
}

export function initialView(): ViewState {
  return {
    azimuthRad: Math.PI / 4,
    elevationRad: Math.PI / 6,
    zoom: 1.0,
    axesVisible: true,
    darkMode: false,
    helpOpen: false,
  };
}

const MIN_ZOOM = 0.2;
const MAX_ZOOM = 8.0;
const MAX_ELEVATION = Math.PI / 2 - 0.01;

export function orbit(view: ViewState, dAzimuth: number, dElevation: number): ViewState {
  const elevation = Math.min(
    MAX_ELEVATION,
    Math.max(-MAX_ELEVATION, view.elevationRad + dElevation),
  );
  let azimuth = (view.azimuthRad + dAzimuth) % (2 * Math.PI);
  if (!Number.isFinite(azimuth) || !Number.isFinite(elevation)) return view;
  return { ...view, azimuthRad: azimuth, elevationRad: elevation };
}

export function zoomBy(view: ViewState, factor: number): ViewState {
  const zoom = Math.min(MAX_ZOOM, Math.max(MIN_ZOOM, view.zoom * factor));
  return Number.isFinite(zoom) ? { ...view, zoom } : view;
}

export function withAxes(view: ViewState, on: boolean): ViewState {
  return { ...view, axesVisible: on };
}

export function withHelp(view: ViewState, on: boolean): ViewState {
  return { ...view, helpOpen: on };
}

export function toggleDarkMode(view: ViewState): ViewState {
  return { ...view, darkMode: !view.darkMode };
}
