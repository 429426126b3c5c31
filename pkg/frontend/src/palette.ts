// Grouping of the device catalogue for the scoring palette. The
// catalogue arrives already in proforma order; grouping must keep it.

import type { Device } from "./types.js";

export interface PaletteGroup {
  key: string; // "A", "B", "C:A" ... "C:G"
  title: string;
  devices: Device[];
}

export const DOMAIN_TITLES: Record<string, string> = {
  A: "Domain A: Word Order and Sentence Structure",
  B: "Domain B: Figures of Speech",
  C: "Domain C: Embellishments",
};

export const PART_TITLES: Record<string, string> = {
  A: "Part A: Word Choice",
  B: "Part B: Addressing Groups",
  C: "Part C: Sentence Construction",
  D: "Part D: Musicality",
  E: "Part E: Strengthening the Argument",
  F: "Part F: Paragraph Construction",
  G: "Part G: Miscellaneous",
};

export function groupDevices(devices: Device[]): PaletteGroup[] {
  const groups: PaletteGroup[] = [];
  let current: PaletteGroup | null = null;
  for (const device of devices) {
    const key = device.domain === "C" ? `C:${device.part}` : device.domain;
    if (!current || current.key !== key) {
      const title =
        device.domain === "C"
          ? `${DOMAIN_TITLES.C}, ${PART_TITLES[device.part ?? ""] ?? ""}`
          : DOMAIN_TITLES[device.domain];
      current = { key, title, devices: [] };
      groups.push(current);
    }
    current.devices.push(device);
  }
  return groups;
}

export function bySlug(devices: Device[]): Map<string, Device> {
  return new Map(devices.map((d) => [d.deep_link_slug, d]));
}

export function byCode(devices: Device[]): Map<string, Device> {
  return new Map(devices.map((d) => [d.code, d]));
}

export function deepLink(device: Device): string {
  return `/device/${device.deep_link_slug}`;
}
