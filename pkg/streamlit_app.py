"""
Streamlit UI for ReesType.

Run with:
    streamlit run streamlit_app.py
"""

import json
import streamlit as st

# ---------------------------------------------------------------------------
# Page configuration
# ---------------------------------------------------------------------------
st.set_page_config(
    page_title="ReesType",
    page_icon="🧮",
    layout="centered",
)

DEFAULT_RING = "char 32003\nvars x,y\n"

# ---------------------------------------------------------------------------
# Header
# ---------------------------------------------------------------------------
st.title("🧮 ReesType")
st.markdown(
    "Compute the **relation type** of an ideal: the largest degree needed "
    "to generate the defining ideal of its Rees algebra. All arithmetic is "
    "exact over a prime field."
)

st.divider()

tab_rt, tab_family = st.tabs(["Relation type", "Non-CM family"])

# ---------------------------------------------------------------------------
# Relation type calculator
# ---------------------------------------------------------------------------
with tab_rt:
    with st.form("relation_type_form"):
        ring_text = st.text_area(
            "Ring definition",
            value=DEFAULT_RING,
            height=140,
            help="Lines `char p`, `vars x,y,...` and any number of `rel <polynomial>`.",
        )
        gens_text = st.text_input(
            "Generators",
            placeholder="e.g. x^2, x*y, y^2",
            help="Comma-separated polynomials in the declared variables.",
        )
        submitted = st.form_submit_button("Compute rt", use_container_width=True)

    if submitted:
        if not ring_text.strip() or not gens_text.strip():
            st.error("Please fill in both the **ring definition** and the **generators**.")
        else:
            with st.spinner("Eliminating and computing Gröbner bases…"):
                try:
                    from src.main import compute_relation_type

                    result = compute_relation_type(ring_text, gens_text)
                except Exception as exc:
                    st.error(f"An unexpected error occurred: {exc}")
                    result = None

            if result is not None:
                st.divider()

                # --- Error response ------------------------------------------
                if "error" in result:
                    st.warning(result["error"])

                # --- Success response ----------------------------------------
                else:
                    col_a, col_b = st.columns(2)
                    with col_a:
                        st.metric("Relation type", result["rt"])
                    with col_b:
                        st.metric("Presentation generators", len(result["relations"]))

                    st.subheader("Presentation")
                    for relation in result["relations"]:
                        st.markdown(f"- degree {relation['degree']}: `{relation['poly']}`")

                    with st.expander("📋 Raw JSON Output"):
                        st.code(json.dumps(result, indent=2), language="json")

# ---------------------------------------------------------------------------
# The (x^{n-1}y + z^n, x^n, y^n) family in k[x,y,z,w]/(w^2, wz)
# ---------------------------------------------------------------------------
with tab_family:
    with st.form("family_form"):
        col1, col2 = st.columns(2)
        with col1:
            n = st.number_input("n", min_value=1, max_value=4, value=2, step=1)
        with col2:
            m = st.number_input(
                "parameter variables m",
                min_value=2,
                max_value=3,
                value=2,
                step=1,
                help="m = 2 is k[x,y,z,w]/(w², wz); m = 3 adds a third parameter.",
            )
        run_family = st.form_submit_button("Replicate", use_container_width=True)

    if run_family:
        with st.spinner(f"Computing the presentation of I_{int(n)}…"):
            try:
                from src.main import replicate_example21

                family = replicate_example21(int(n), int(m))
            except Exception as exc:
                st.error(f"An unexpected error occurred: {exc}")
                family = None

        if family is not None:
            st.divider()
            if "error" in family:
                st.warning(family["error"])
            else:
                col_a, col_b = st.columns(2)
                with col_a:
                    st.metric("Relation type", family["rt"])
                    st.metric("rt ≥ n", "yes" if family["rt_at_least_n"] else "no")
                with col_b:
                    st.metric("Degrees present", ", ".join(str(d) for d in family["presentation_degrees"]))
                    st.metric("Irreducible", "yes" if family["irreducible"] else "no")
                st.markdown(f"**Relation checked:** `{family['relation']}`")

                with st.expander("📋 Raw JSON Output"):
                    st.code(json.dumps(family, indent=2), language="json")

# ---------------------------------------------------------------------------
# Footer
# ---------------------------------------------------------------------------
st.divider()
st.caption("ReesType • Buchberger over F_p • LangGraph pipelines • SymPy parsing")
